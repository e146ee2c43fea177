import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sp():
    return pytest.importorskip("sympy")


@pytest.fixture(scope="session")
def to_sympy(sp):
    """MultiPoly -> sympy expression, built term by term (no string parsing)."""

    def convert(p):
        syms = [sp.Symbol(g) for g in p.gens]
        out = sp.Integer(0)
        for exps, c in p.terms.items():
            term = sp.Integer(c)
            for s, e in zip(syms, exps):
                term *= s ** e
            out += term
        return sp.expand(out)

    return convert
