"""Certified isolation of positive real roots by exact rational bisection."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import MultipleSignChanges, NoPositiveRoot
from . import univariate as up
from .multipoly import MultiPoly

DEFAULT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class RootEnclosure:
    """Rational interval [lo, hi] holding exactly one root of ``poly``.

    ``exact`` marks a rational root, in which case lo == hi.
    """

    poly: MultiPoly | None
    lo: Fraction
    hi: Fraction
    exact: bool = False

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float(self.midpoint)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    @classmethod
    def point(cls, value, poly: MultiPoly | None = None) -> "RootEnclosure":
        value = Fraction(value)
        return cls(poly, value, value, exact=True)


def _variation_on(coeffs: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Descartes sign variation for roots of p in the open interval (lo, hi).

    Counts sign changes of (1+t)^n p((lo + hi t)/(1 + t)); the count bounds the
    number of roots in (lo, hi) and has the same parity.
    """
    n = len(coeffs) - 1
    # p(x) with x = (lo + hi t)/(1 + t): sum c_i (lo + hi t)^i (1 + t)^(n-i)
    lo_num, lo_den = lo.numerator, lo.denominator
    hi_num, hi_den = hi.numerator, hi.denominator
    # scale by lo_den^n hi_den^n-free form: work with (lo_den*hi_den) common factor
    d = lo_den * hi_den
    lin = [lo_num * hi_den, hi_num * lo_den]  # (lo + hi t) * d
    base = [d, d]  # (1 + t) * d
    lin_pows = [[1]]
    base_pows = [[1]]
    for _ in range(n):
        lin_pows.append(up.mul(lin_pows[-1], lin))
        base_pows.append(up.mul(base_pows[-1], base))
    total: list[int] = []
    for i, c in enumerate(coeffs):
        if c:
            total = up.add(total, up.scale(up.mul(lin_pows[i], base_pows[n - i]), c))
    return up.sign_changes(total)


def _sign(coeffs: Sequence[int], x: Fraction) -> int:
    v = up.evaluate(coeffs, x)
    return (v > 0) - (v < 0)


def _root_bound(coeffs: Sequence[int]) -> Fraction:
    lead = abs(coeffs[-1])
    return 1 + Fraction(max(abs(c) for c in coeffs[:-1]), lead) if len(coeffs) > 1 else Fraction(1)


def positive_root_intervals(coeffs: Sequence[int], lo: Fraction | None = None,
                            hi: Fraction | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the distinct roots of a polynomial in (lo, hi].

    Degenerate intervals (a == b) denote exact rational roots.
    """
    sf = up.squarefree_part(coeffs)
    if len(sf) <= 1:
        return []
    lo = Fraction(0) if lo is None else Fraction(lo)
    hi = _root_bound(sf) if hi is None else Fraction(hi)
    found: list[tuple[Fraction, Fraction]] = []
    if hi > lo and up.evaluate(sf, hi) == 0:
        found.append((hi, hi))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        v = _variation_on(sf, a, b)
        if v == 0:
            continue
        if v == 1:
            found.append((a, b))
            continue
        m = (a + b) / 2
        if up.evaluate(sf, m) == 0:
            found.append((m, m))
        stack.append((a, m))
        stack.append((m, b))
    return sorted(found)


def refine(coeffs: Sequence[int], lo: Fraction, hi: Fraction, tol: Fraction) -> tuple[Fraction, Fraction, bool]:
    """Bisect an isolating interval of a simple root until width ≤ tol."""
    if lo == hi:
        return lo, hi, True
    s_lo = _sign(coeffs, lo)
    s_hi = _sign(coeffs, hi)
    if s_lo == 0:
        return lo, lo, True
    if s_hi == 0:
        return hi, hi, True
    if s_lo == s_hi:
        raise ValueError("interval does not bracket a sign change")
    while hi - lo > tol:
        m = (lo + hi) / 2
        s = _sign(coeffs, m)
        if s == 0:
            return m, m, True
        if s == s_lo:
            lo = m
        else:
            hi = m
    # cheap rational recognition: many roots here are small-denominator rationals
    guess = ((lo + hi) / 2).limit_denominator(10**6)
    if lo <= guess <= hi and up.evaluate(coeffs, guess) == 0:
        return guess, guess, True
    return lo, hi, False


def isolate_positive_root(p: MultiPoly | Sequence[int], tol=DEFAULT_TOL, *,
                          unique: bool = False,
                          bracket: tuple | None = None,
                          which: str = "smallest") -> RootEnclosure:
    """Enclose a positive real root of a univariate polynomial.

    ``bracket`` restricts the search to (lo, hi]; ``unique`` demands a
    Descartes certificate that exactly one root lies in the search range.
    ``which`` chooses the smallest or largest root when several exist.
    """
    poly = p if isinstance(p, MultiPoly) else MultiPoly.from_univariate("u", p)
    coeffs = poly.univariate()
    coeffs = up.trim(coeffs)
    if len(coeffs) <= 1:
        raise NoPositiveRoot(f"{poly} has no roots")
    while coeffs[0] == 0:  # x = 0 is not positive
        coeffs = coeffs[1:]
    tol = Fraction(tol)
    lo, hi = (None, None) if bracket is None else (Fraction(bracket[0]), Fraction(bracket[1]))
    if unique:
        sf = up.squarefree_part(coeffs)
        if lo is None:
            v = up.sign_changes(sf)
        else:
            v = _variation_on(sf, lo, hi) + (1 if up.evaluate(sf, hi) == 0 else 0)
        if v == 0:
            raise NoPositiveRoot(f"{poly} has no root in the search range")
        if v != 1:
            raise MultipleSignChanges(f"cannot certify a unique root of {poly}: {v} sign changes")
    intervals = positive_root_intervals(coeffs, lo, hi)
    if not intervals:
        raise NoPositiveRoot(f"{poly} has no positive root in the search range")
    a, b = intervals[0] if which == "smallest" else intervals[-1]
    sf = up.squarefree_part(coeffs)
    a, b, exact = refine(sf, a, b, tol)
    return RootEnclosure(poly, a, b, exact)


def positive_roots(p: MultiPoly | Sequence[int], tol=DEFAULT_TOL) -> list[RootEnclosure]:
    """All distinct positive real roots, each refined to width ≤ tol."""
    poly = p if isinstance(p, MultiPoly) else MultiPoly.from_univariate("u", p)
    coeffs = up.trim(poly.univariate())
    if len(coeffs) <= 1:
        return []
    while coeffs[0] == 0:
        coeffs = coeffs[1:]
    sf = up.squarefree_part(coeffs)
    out = []
    for a, b in positive_root_intervals(coeffs):
        a, b, exact = refine(sf, a, b, Fraction(tol))
        out.append(RootEnclosure(poly, a, b, exact))
    return out
