import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lukasiewicz.bijections import (AREA_PARAMS, MOTZKIN_PARAMS, DyckPath, MotzkinPath,
                                    RiseRestriction, area_dyck_to_luka, area_luka_to_dyck,
                                    dyck_weight_polynomial, is_rise_restricted, iter_dyck,
                                    iter_motzkin, luka_to_rise_dyck, motzkin_inverse, motzkin_map,
                                    motzkin_number, right_visible, rise_decompose, rise_dyck_to_luka,
                                    verify_bijection)
from lukasiewicz.errors import (InvalidPath, NotAJumpStep, ResourceLimit, RiseRestrictionViolated,
                                WrongModel)
from lukasiewicz.exactalg import MultiPoly
from lukasiewicz.paths import INF, ModelParams, enumerate_paths, partition_polynomial, validate

RISE_PARAMS = [ModelParams(0, 1), ModelParams(1, 1), ModelParams(1, 2), ModelParams(0, 2),
               ModelParams(2, 4), ModelParams(0, INF), ModelParams(1, INF)]


def motzkin_by_recurrence(n):
    m = [1]
    for i in range(1, n + 1):
        m.append(m[i - 1] + sum(m[j] * m[i - 2 - j] for j in range(i - 1)))
    return m[n]


def test_lattice_types_validate():
    with pytest.raises(InvalidPath):
        DyckPath("DU")
    with pytest.raises(InvalidPath):
        DyckPath("UUD")
    with pytest.raises(InvalidPath):
        MotzkinPath("UX")
    m = MotzkinPath("UHD")
    assert m.heights == (0, 1, 1, 0) and m.contacts == 1 and m.area == 2


def test_rise_decomposition():
    assert [(r.length, r.hook_length) for r in rise_decompose(DyckPath("UUDD"))] == [(2, 3)]
    assert [r.length for r in rise_decompose(DyckPath("UDUD"))] == [1, 1]
    assert [r.length for r in rise_decompose(DyckPath("UUDUDD"))] == [2, 1]
    d = DyckPath("UUDUDDUUUDDD")
    assert sum(r.length for r in rise_decompose(d)) == 6


def test_rise_examples():
    assert str(luka_to_rise_dyck(validate(ModelParams(1, 1), [1, -1]))) == "UUDD"
    assert str(luka_to_rise_dyck(validate(ModelParams(0, INF), [0]))) == "UD"
    assert str(luka_to_rise_dyck(validate(ModelParams(1, 2), [2, -1, -1]))) == "UUUDDD"
    assert rise_dyck_to_luka(DyckPath("UUDD"), ModelParams(1, 1)).steps == (1, -1)
    assert rise_dyck_to_luka(DyckPath("UDUD"), ModelParams(0, INF)).steps == (0, 0)
    with pytest.raises(RiseRestrictionViolated):
        rise_dyck_to_luka(DyckPath("UUDD"), ModelParams(0, 0))


def test_right_visible_examples():
    P = ModelParams(1, INF)
    assert right_visible(validate(P, [2, -1, -1]), 0) == [1, 2]
    assert right_visible(validate(P, [1, -1, 1, -1]), 2) == [3]
    assert right_visible(validate(P, [2, 1, -1, -1, -1]), 0) == [3, 4]
    with pytest.raises(NotAJumpStep):
        right_visible(validate(P, [1, -1]), 1)


def test_motzkin_examples():
    P = MOTZKIN_PARAMS
    assert str(motzkin_map(validate(P, [1, -1]), 1)) == "H"
    assert str(motzkin_map(validate(P, [1, -1]), 2)) == "UD"
    assert str(motzkin_map(validate(P, [2, -1, -1]), 2)) == "HH"
    assert {str(m) for m in iter_motzkin(2)} == {"UD", "HH"}
    assert motzkin_inverse(MotzkinPath("H")).steps == (1, -1)
    assert motzkin_inverse(MotzkinPath("UD")).steps == (1, -1)
    assert motzkin_inverse(MotzkinPath("HH")).steps == (2, -1, -1)
    with pytest.raises(WrongModel):
        motzkin_map(validate(ModelParams(0, INF), [0]), 1)


def test_area_examples():
    P = AREA_PARAMS
    cases = [([0, 0], "UDUD", 2), ([1, -1], "UUDD", 4), ([0], "UD", 1)]
    for steps, dyck, area in cases:
        d = area_luka_to_dyck(validate(P, steps))
        assert str(d) == dyck and d.area == area
        assert area_dyck_to_luka(DyckPath(dyck)).steps == tuple(steps)
    with pytest.raises(WrongModel):
        area_luka_to_dyck(validate(ModelParams(1, INF), [1, -1]))


@pytest.mark.parametrize("n", range(13))
def test_motzkin_cardinality(n):
    m = motzkin_by_recurrence(n)
    assert motzkin_number(n) == m
    assert len(enumerate_paths(MOTZKIN_PARAMS, n)) + len(enumerate_paths(MOTZKIN_PARAMS, n + 1)) == m


def test_no_horizontal_steps_when_k_is_one():
    for n in range(9):
        assert all(0 not in p.steps for p in enumerate_paths(MOTZKIN_PARAMS, n))


@pytest.mark.parametrize("params", RISE_PARAMS, ids=str)
def test_rise_bijection_exhaustive(params):
    for n in range(9):
        assert verify_bijection("rise", params, n).passed


@pytest.mark.parametrize("kind", ["motzkin", "area"])
def test_other_bijections_exhaustive(kind):
    for n in range(9):
        assert verify_bijection(kind, None, n).passed


def test_report_examples():
    assert verify_bijection("rise", ModelParams(1, 2), 8).passed
    rep = verify_bijection("motzkin", None, 6)
    assert rep.passed and rep.source_count == 51 == rep.target_count
    obj = json.loads(verify_bijection("area", None, 8).to_json())
    assert obj["pass"] is True and obj["kind"] == "area" and "counterexample" not in obj
    assert set(obj) >= {"kind", "params", "n", "source_count", "target_count", "pass"}


def test_report_catches_a_broken_map(monkeypatch):
    import lukasiewicz.bijections as b
    monkeypatch.setattr(b, "area_luka_to_dyck", lambda l: DyckPath("UD" * len(l)))
    rep = b.verify_bijection("area", None, 3)
    assert not rep.passed and rep.counterexample


def test_verify_errors():
    with pytest.raises(ResourceLimit):
        verify_bijection("area", None, 8, cap=100)
    with pytest.raises(WrongModel):
        verify_bijection("motzkin", ModelParams(0, INF), 3)
    with pytest.raises(ValueError):
        verify_bijection("nope", None, 3)


@pytest.mark.parametrize("n", range(9))
def test_area_generating_identity(n):
    # Σ a^c q^m over (0,inf) paths equals Σ a^c q^{(m'-n)/2} over Dyck paths of length 2n
    luka = partition_polynomial(AREA_PARAMS, n, with_area=True)
    dyck = dyck_weight_polynomial(iter_dyck(n), lambda m: (m - n) // 2)
    assert luka == dyck
    # every Dyck area has the parity of n, so the substitution is exact
    assert all((d.area - n) % 2 == 0 for d in iter_dyck(n))


def test_area_law_direction():
    # Lukasiewicz area m goes to Dyck area 2m + n; the reverse reading fails already at n = 2
    for l in enumerate_paths(AREA_PARAMS, 2):
        d = area_luka_to_dyck(l)
        m = sum(l.heights)
        assert d.area == 2 * m + 2
    assert any(sum(area_dyck_to_luka(d).heights) != 2 * d.area + 2 for d in iter_dyck(2))


def paths_of(params, max_n):
    return st.integers(0, max_n).flatmap(
        lambda n: st.sampled_from(sorted(enumerate_paths(params, n), key=lambda p: p.steps) or [None]))


@given(st.sampled_from(RISE_PARAMS).flatmap(lambda p: paths_of(p, 9)))
def test_rise_round_trip(path):
    if path is None:
        return
    d = luka_to_rise_dyck(path)
    assert rise_dyck_to_luka(d, path.params) == path
    assert is_rise_restricted(d, RiseRestriction.shifted(path.params))
    assert d.contacts == sum(1 for h in path.heights[1:] if h == 0)


@given(paths_of(AREA_PARAMS, 10))
def test_area_round_trip(path):
    d = area_luka_to_dyck(path)
    assert area_dyck_to_luka(d) == path
    assert d.area == 2 * sum(path.heights) + len(path)


@given(st.integers(0, 10).flatmap(lambda n: st.sampled_from(list(iter_motzkin(n)))))
def test_motzkin_round_trip(m):
    l = motzkin_inverse(m)
    n = len(m)
    surface_h = any(s == "H" and h == 0 for s, h in zip(m.steps, m.heights))
    assert len(l) == (n + 1 if surface_h else n)
    assert motzkin_map(l, n) == m
