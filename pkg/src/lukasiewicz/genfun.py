"""Algebraic generating functions of restricted Lukasiewicz paths.

L(z) counts paths without contact weight and satisfies
    L = 1 + Σ_{j=k}^{ell} (zL)^{j+1},
while the contact generating function R(z; a) satisfies
    R = 1 + a z Σ_{j=k}^{ell} (zL)^j R.
Both are expanded here as exact truncated power series, and for finite ell the
polynomial equations P2(L, z) = 0 and P1(R, z, a) = 0 are built explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InfiniteEll
from .exactalg import MultiPoly, mobius_substitute, primitive_normalize
from .paths import ModelParams

_ZERO = MultiPoly.const(0)
_ONE = MultiPoly.const(1)


class Series:
    """Power series in z truncated after z^order, with MultiPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coeffs]
        cs = cs[:order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: list[MultiPoly] = cs

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([_ONE], order)

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls([_ZERO, _ONE], order)

    @classmethod
    def from_poly(cls, p: MultiPoly, order: int, var: str = "z") -> "Series":
        return cls(p.coeffs(var), order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n] if 0 <= n <= self.order else _ZERO

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self[i] == other[i] for i in range(n + 1))

    def __add__(self, other) -> "Series":
        other = _as_series(other, self.order)
        n = min(self.order, other.order)
        return Series([self[i] + other[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "Series":
        return self + (-_as_series(other, self.order))

    def __rsub__(self, other) -> "Series":
        return _as_series(other, self.order) - self

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, MultiPoly)):
            return Series([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a = [(i, c) for i, c in enumerate(self.coeffs[:n + 1]) if c]
        b = [(j, d) for j, d in enumerate(other.coeffs[:n + 1]) if d]
        out = [_ZERO] * (n + 1)
        for i, c in a:
            for j, d in b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + c * d
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        out = Series.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int = 1) -> "Series":
        """Multiply by z^k."""
        return Series([_ZERO] * k + self.coeffs, self.order)

    def inverse(self) -> "Series":
        """1/self; the constant term must be ±1."""
        c0 = self[0]
        if c0 not in (_ONE, -_ONE):
            raise ZeroDivisionError("series inverse needs constant term ±1")
        sign = 1 if c0 == _ONE else -1
        out = [MultiPoly.const(sign)]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[n - i]
            out.append(-acc * sign)
        return Series(out, self.order)

    def map(self, fn) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.order)

    def subs(self, var: str, value) -> "Series":
        return self.map(lambda c: c.subs(var, value))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def table(self) -> list[tuple[int, MultiPoly]]:
        return list(enumerate(self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})z^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"Series[{self.order}]({body or '0'})"


def _as_series(x, order: int) -> Series:
    return x if isinstance(x, Series) else Series([x], order)


def horner(poly: MultiPoly, var: str, value: Series, z_var: str = "z") -> Series:
    """Evaluate ``poly`` at ``var`` = value, treating ``z_var`` as the series variable."""
    order = value.order
    cs = poly.coeffs(var)
    out = Series.from_poly(cs[-1], order, z_var)
    for c in reversed(cs[:-1]):
        out = out * value + Series.from_poly(c, order, z_var)
    return out


# -- Γ and the algebraic system ------------------------------------------------

@dataclass(frozen=True)
class GammaForm:
    """Γ(u) = Σ_{j=k}^{ell} u^{j+1} as numerator/denominator in u.

    The denominator is 1 for finite ell and 1 - u for ell = INF.
    """

    params: ModelParams
    numerator: MultiPoly
    denominator: MultiPoly

    def __call__(self, u):
        u_ = {"u": u}
        return self.numerator.evaluate(u_) / self.denominator.evaluate(u_)

    def __str__(self) -> str:
        if self.denominator == _ONE:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def gamma_form(params: ModelParams) -> GammaForm:
    u = MultiPoly.var("u")
    if params.finite:
        num = sum((u ** (j + 1) for j in range(params.k, params.ell + 1)), _ZERO)
        return GammaForm(params, num, _ONE)
    return GammaForm(params, u ** (params.k + 1), 1 - u)


def _require_finite(params: ModelParams, what: str):
    if not params.finite:
        raise InfiniteEll(f"{what} is not polynomial for ell = inf")


def build_P2(params: ModelParams) -> MultiPoly:
    """Σ_{j=k}^{ell} (zL)^{j+1} - L + 1."""
    _require_finite(params, "P2")
    zL = MultiPoly.var("z") * MultiPoly.var("L")
    return sum((zL ** (j + 1) for j in range(params.k, params.ell + 1)), _ZERO) - MultiPoly.var("L") + 1


def build_P1(params: ModelParams) -> MultiPoly:
    """P2 with L = aR/(1 + (a-1)R), denominators cleared, primitive-normalized."""
    _require_finite(params, "P1")
    a = MultiPoly.var("a")
    p = mobius_substitute(build_P2(params), "L", a, 0, a - 1, 1)
    return primitive_normalize(p.subs("L", MultiPoly.var("R")))


def indicial_coefficient(params: ModelParams) -> MultiPoly:
    """(a-1)^ell - Σ_{j=k}^{ell} (az)^{j+1} (a-1)^{ell-j}."""
    _require_finite(params, "the indicial coefficient")
    a, z = MultiPoly.var("a"), MultiPoly.var("z")
    ell = params.ell
    return (a - 1) ** ell - sum(((a * z) ** (j + 1) * (a - 1) ** (ell - j)
                                 for j in range(params.k, ell + 1)), _ZERO)


@dataclass(frozen=True)
class AlgebraicSystem:
    params: ModelParams
    P2: MultiPoly
    P1: MultiPoly
    indicial: MultiPoly


def algebraic_system(params: ModelParams) -> AlgebraicSystem:
    return AlgebraicSystem(params, build_P2(params), build_P1(params), indicial_coefficient(params))


# -- series expansions ---------------------------------------------------------

def _jump_sum(params: ModelParams, x: Series, offset: int) -> Series:
    """Σ_{j=k}^{ell} x^{j+offset}, where x has zero constant term."""
    order = x.order
    top = params.ell if params.finite else order  # x^m vanishes for m > order
    total = Series([], order)
    power = x ** (params.k + offset)
    for _ in range(params.k, top + 1):
        if power.is_zero():
            break
        total = total + power
        power = power * x
    return total


def series_L(params: ModelParams, order: int) -> Series:
    """L(z) through z^order by fixed-point iteration of L = 1 + Σ (zL)^{j+1}."""
    if order < 0:
        raise ValueError("order must be non-negative")
    L = Series.one(order)
    for _ in range(order + 1):
        L = 1 + _jump_sum(params, L.shift(1), 1)
    return L


def series_R(params: ModelParams, order: int, L: Series | None = None) -> Series:
    """R(z; a) through z^order by fixed-point iteration of R = 1 + a z Σ (zL)^j R."""
    if L is None:
        L = series_L(params, order)
    a = MultiPoly.var("a")
    kernel = _jump_sum(params, L.shift(1), 0).shift(1) * a
    R = Series.one(order)
    for _ in range(order + 1):
        R = 1 + kernel * R
    return R


def substitute_series(poly: MultiPoly, var: str, s: Series) -> Series:
    """poly(var = s) as a series in z (z-dependence of poly is expanded too)."""
    return horner(poly, var, s)


def series_table(s: Series) -> list[tuple[int, str]]:
    return [(n, str(c)) for n, c in enumerate(s.coeffs)]


def coefficients_json(s: Series, gens: Sequence[str] = ("a",)) -> list[dict]:
    return [{"n": n, "poly": c.to_json_obj(gens)} for n, c in enumerate(s.coeffs)]
