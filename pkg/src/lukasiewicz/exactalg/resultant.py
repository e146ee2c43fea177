"""Sylvester resultants, discriminants and Möbius substitution.

The Sylvester determinant is always evaluated with fraction-free (Bareiss)
elimination over ℤ.  When the polynomials carry parameters besides the
eliminated variable, the determinant is evaluated on an integer grid of
parameter values and the result is recovered by exact Newton interpolation,
which avoids the expression swell of symbolic elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DegenerateMap, ZeroPolynomial
from .multipoly import MultiPoly, _check_gens, _lift


def sylvester_matrix(p: Sequence, q: Sequence) -> list[list]:
    """Sylvester matrix of coefficient lists given highest degree first."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    zero = 0 * p[0]
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(p) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(q) + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _newton_coefficients(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Monomial coefficients of the interpolating polynomial; must be integral."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[i]) + dd[i]
        nxt = [Fraction(0)] * n
        for d in range(n - 1):
            nxt[d + 1] += coeffs[d]
            nxt[d] -= coeffs[d] * xs[i]
        nxt[0] += dd[i]
        coeffs = nxt
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated resultant is not integral; degree bound too small?")
        out.append(int(c))
    return out


def _nodes(count: int) -> list[int]:
    # 0, 1, -1, 2, -2, ... keeps evaluation values small
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out


def _interpolate(gens: tuple[str, ...], bounds: Sequence[int], value) -> MultiPoly:
    """Recover a polynomial in ``gens`` with per-variable degree ≤ ``bounds``."""
    grids = [_nodes(b + 1) for b in bounds]

    def level(i: int, prefix: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        if i == len(gens):
            v = value(dict(zip(gens, prefix)))
            return {(): v} if v else {}
        xs = grids[i]
        subs = [level(i + 1, prefix + (x,)) for x in xs]
        keys = set().union(*subs)
        out: dict[tuple[int, ...], int] = {}
        for key in keys:
            ys = [s.get(key, 0) for s in subs]
            for e, c in enumerate(_newton_coefficients(xs, ys)):
                if c:
                    out[(e,) + key] = c
        return out

    return MultiPoly(level(0, ()), gens)


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Res(p, q; var) as the raw Sylvester determinant (p's rows first)."""
    p, q = _lift(p), _lift(q)
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    pc = p.coeffs(var)[::-1]
    qc = q.coeffs(var)[::-1]
    m, n = len(pc) - 1, len(qc) - 1
    if m == 0 and n == 0:
        return MultiPoly.const(1)
    others = tuple(g for g in (set(p.gens) | set(q.gens)) if g != var)
    if not others:
        mat = sylvester_matrix([c.constant_value() for c in pc], [c.constant_value() for c in qc])
        return MultiPoly.const(bareiss_det(mat))
    rest = _check_gens(others)
    bounds = []
    for g in rest:
        dp = max(c.degree(g) for c in pc)
        dq = max(c.degree(g) for c in qc)
        bounds.append(n * dp + m * dq)

    def value(point):
        ip = [c.evaluate_int(point) for c in pc]
        iq = [c.evaluate_int(point) for c in qc]
        return bareiss_det(sylvester_matrix(ip, iq))

    return _interpolate(rest, bounds, value)


def discriminant(p: MultiPoly, var: str, normalized: bool = False) -> MultiPoly:
    """Res(p, ∂p/∂var; var).

    With ``normalized`` the result is divided by the leading coefficient and
    multiplied by (-1)^(n(n-1)/2), so a p2·x² + p1·x + p0 gives p1² - 4·p2·p0.
    A degree-1 polynomial has discriminant 1 in the normalized convention.
    """
    p = _lift(p)
    if p.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    n = p.degree(var)
    if n < 1:
        raise ZeroPolynomial(f"{p} has degree 0 in {var}")
    raw = resultant(p, p.diff(var), var)
    if not normalized:
        return raw
    out = raw.exact_div(p.coeffs(var)[-1])
    return -out if (n * (n - 1) // 2) % 2 else out


def mobius_substitute(p: MultiPoly, var: str, alpha, beta, gamma, delta) -> MultiPoly:
    """(γ·x + δ)^n · p((α·x + β)/(γ·x + δ)) with x = ``var`` and n = deg_x p."""
    alpha, beta, gamma, delta = (_lift(c) for c in (alpha, beta, gamma, delta))
    if (alpha * delta - beta * gamma).is_zero():
        raise DegenerateMap("αδ - βγ vanishes identically")
    x = MultiPoly.var(var)
    num = alpha * x + beta
    den = gamma * x + delta
    cs = p.coeffs(var)
    n = len(cs) - 1
    num_pows = [MultiPoly.const(1)]
    den_pows = [MultiPoly.const(1)]
    for _ in range(n):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    out = MultiPoly.const(0)
    for i, c in enumerate(cs):
        if c:
            out = out + c * num_pows[i] * den_pows[n - i]
    return out


__all__ = ["sylvester_matrix", "bareiss_det", "resultant", "discriminant",
           "mobius_substitute"]
