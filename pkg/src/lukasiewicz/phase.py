"""Critical points, radius of convergence, free energy and critical polynomials."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateModel, DomainError, InfiniteEll
from .exactalg import (DEFAULT_TOL, MultiPoly, RootEnclosure, discriminant,
                       isolate_positive_root, positive_roots, primitive_normalize, resultant)
from .exactalg import univariate as up
from .exactalg.roots import refine
from .genfun import build_P1, build_P2, gamma_form, indicial_coefficient
from .paths import INF, Ell, ModelParams, partition_polynomial

_u = MultiPoly.var("u")
_z = MultiPoly.var("z")
_a = MultiPoly.var("a")


@dataclass(frozen=True)
class CriticalPoint:
    params: ModelParams
    u_c: RootEnclosure
    z_c: RootEnclosure
    a_c: RootEnclosure
    L_c: tuple[Fraction, Fraction]  # enclosure of 1 + Γ(u_c)

    def as_dict(self) -> dict:
        return {"params": str(self.params), "u_c": float(self.u_c), "z_c": float(self.z_c),
                "a_c": float(self.a_c)}


def _is_degenerate(params: ModelParams) -> bool:
    return params.k == 0 and params.ell == 0


def critical_equation(params: ModelParams) -> MultiPoly:
    """Polynomial in u whose unique root in the physical range is u_c.

    Finite ell: Σ j u^{j+1} - 1.  Infinite ell: the numerator of
    Σ_{j≥k} j u^{j+1} - 1 = [k u^{k+1}(1-u) + u^{k+2} - (1-u)^2] / (1-u)^2.
    """
    k = params.k
    if params.finite:
        return sum((j * _u ** (j + 1) for j in range(k, params.ell + 1)), MultiPoly.const(0)) - 1
    return k * _u ** (k + 1) * (1 - _u) + _u ** (k + 2) - (1 - _u) ** 2


# Σ j u^{j+1} is strictly increasing on u > 0 and reaches 1 by u = 1 once ell ≥ 1;
# for ell = inf the closed form blows up at u = 1, so the root lies in (0, 1).
_U_BRACKET = (Fraction(0), Fraction(1))
_DYADIC = 2**80


def _tighten(poly: MultiPoly, lo: Fraction, hi: Fraction, tol: Fraction) -> RootEnclosure:
    """Shrink an enclosure [lo, hi] of a root of ``poly`` using exact bisection."""
    if lo == hi:
        return RootEnclosure(poly, lo, hi, True)
    # round outward to dyadics so the bisection does not drag huge denominators along
    lo = Fraction(math.floor(lo * _DYADIC), _DYADIC)
    hi = Fraction(math.ceil(hi * _DYADIC), _DYADIC)
    coeffs = up.squarefree_part(poly.univariate())
    s_lo = up.evaluate(coeffs, lo)
    s_hi = up.evaluate(coeffs, hi)
    if s_lo == 0:
        return RootEnclosure(poly, lo, lo, True)
    if s_hi == 0:
        return RootEnclosure(poly, hi, hi, True)
    if (s_lo > 0) != (s_hi > 0):
        a, b, exact = refine(coeffs, lo, hi, tol)
        return RootEnclosure(poly, a, b, exact)
    return RootEnclosure(poly, lo, hi, False)


def critical_point(params: ModelParams, tol=DEFAULT_TOL) -> CriticalPoint:
    if _is_degenerate(params):
        raise DegenerateModel("(0,0) has no finite L_c and no adsorption transition")
    tol = Fraction(tol)
    f = critical_equation(params)
    u_c = isolate_positive_root(f, tol, unique=params.finite, bracket=_U_BRACKET)
    gam = gamma_form(params)
    g_lo, g_hi = gam(u_c.lo), gam(u_c.hi)  # Γ is increasing on (0, 1]
    z_lo, z_hi = u_c.lo / (1 + g_hi), u_c.hi / (1 + g_lo)
    a_lo, a_hi = 1 + 1 / g_hi, 1 + 1 / g_lo
    num, den = gam.numerator, gam.denominator
    z_poly = primitive_normalize(resultant(f, _z * (den + num) - _u * den, "u"))
    a_poly = primitive_normalize(resultant(f, (_a - 1) * num - den, "u"))
    return CriticalPoint(params, u_c, _tighten(z_poly, z_lo, z_hi, tol),
                         _tighten(a_poly, a_lo, a_hi, tol), (1 + g_lo, 1 + g_hi))


def _specialize(poly: MultiPoly, var: str, value: Fraction, keep: str) -> list[int]:
    """Integer coefficient list in ``keep`` of poly with ``var`` set to a rational."""
    coeffs = [c.evaluate({var: value}) if c.gens else Fraction(c.constant_value())
              for c in poly.coeffs(keep)]
    m = math.lcm(*(c.denominator for c in coeffs))
    return [int(c * m) for c in coeffs]


def zc_plus(params: ModelParams, a, tol=DEFAULT_TOL) -> RootEnclosure:
    """Root z⁺(a) of 1/(a-1) = Γ(az/(a-1)), a > 1."""
    a = Fraction(a)
    if a <= 1:
        raise DomainError("z⁺(a) needs a > 1")
    tol = Fraction(tol)
    if params.finite:
        coeffs = _specialize(indicial_coefficient(params), "a", a, "z")
        return isolate_positive_root(MultiPoly.from_univariate("z", coeffs), tol, unique=True)
    # u = az/(a-1) solves (a-1) u^{k+1} + u - 1 = 0 on (0, 1)
    k = params.k
    coeffs = [0] * (k + 2)
    coeffs[0] -= a.denominator
    coeffs[1] += a.denominator
    coeffs[k + 1] += a.numerator - a.denominator
    scale = (a - 1) / a
    u = isolate_positive_root(coeffs, tol * a / (a - 1), unique=True)
    lo, hi = u.lo * scale, u.hi * scale
    # express the enclosure against the z-polynomial obtained from u = a z/(a-1)
    zpoly = _specialize(((_a - 1) * (_a * _z) ** (k + 1) + _a * _z * (_a - 1) ** k - (_a - 1) ** (k + 1)),
                        "a", a, "z")
    return RootEnclosure(MultiPoly.from_univariate("z", zpoly), lo, hi, u.exact)


def zc_of_a(params: ModelParams, a, tol=DEFAULT_TOL) -> RootEnclosure:
    """Radius of convergence of R(z; a) for a ≥ 1."""
    a = Fraction(a)
    if a < 1:
        raise DomainError("the radius of convergence is computed for a >= 1 only")
    if _is_degenerate(params):
        # R = 1/(1 - a z)
        return RootEnclosure.point(1 / a, MultiPoly.from_univariate("z", [-a.denominator, a.numerator]))
    cp = critical_point(params, tol)
    if a <= cp.a_c.hi:
        return cp.z_c
    return zc_plus(params, a, tol)


def free_energy(params: ModelParams, a, tol=DEFAULT_TOL, digits: int = 30) -> Decimal:
    """κ(a) = -log z_c(a), from the midpoint of the certified enclosure."""
    z = zc_of_a(params, a, tol).midpoint
    with localcontext() as ctx:
        ctx.prec = digits
        return -(Decimal(z.numerator) / Decimal(z.denominator)).ln()


@dataclass(frozen=True)
class PhasePoint:
    a: Fraction
    z_c: RootEnclosure
    kappa: Decimal


@dataclass(frozen=True)
class PhaseCurve:
    params: ModelParams
    a_c: RootEnclosure
    points: list[PhasePoint] = field(default_factory=list)


def phase_curve(params: ModelParams, a_values: Iterable, tol=DEFAULT_TOL) -> PhaseCurve:
    cp = critical_point(params, tol)
    pts = []
    for a in a_values:
        a = Fraction(a)
        z = cp.z_c if a <= cp.a_c.hi else zc_plus(params, a, tol)
        with localcontext() as ctx:
            ctx.prec = 30
            m = z.midpoint
            kappa = -(Decimal(m.numerator) / Decimal(m.denominator)).ln()
        pts.append(PhasePoint(a, z, kappa))
    return PhaseCurve(params, cp.a_c, pts)


def a_grid(lo, hi, count: int) -> list[Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    if count < 2:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


# -- discriminant / indicial analysis -------------------------------------------

def crit_polynomial(params: ModelParams, form: str = "resultant") -> MultiPoly:
    """Polynomial in a vanishing at the critical contact weight.

    ``form="resultant"`` eliminates z between the discriminant of P1 and the
    indicial coefficient, Res_z(ΔP1, p_{k,ell+1}); the discriminant factor
    a^{ell(ell+1)} of ΔP1 is kept.  ``form="reduced"`` eliminates u instead,
    Res_u(Σ j u^{j+1} - 1, (a-1)Γ(u) - 1), which carries no spurious factors.
    Both are primitive-normalized.
    """
    if _is_degenerate(params):
        raise DegenerateModel("(0,0) has no critical point")
    if form == "reduced":
        gam = gamma_form(params)
        return primitive_normalize(resultant(critical_equation(params),
                                             (_a - 1) * gam.numerator - gam.denominator, "u"))
    if form != "resultant":
        raise ValueError(f"unknown form {form!r}")
    if not params.finite:
        raise InfiniteEll("the discriminant route needs a polynomial system")
    dP1 = discriminant(build_P1(params), "R", normalized=True)
    return primitive_normalize(resultant(dP1, indicial_coefficient(params), "z"))


def crit_root_near(poly: MultiPoly, target: Fraction, tol=DEFAULT_TOL) -> RootEnclosure:
    """The positive real root of a crit polynomial closest to ``target``."""
    roots = positive_roots(poly, tol)
    if not roots:
        raise ValueError(f"{poly} has no positive roots")
    return min(roots, key=lambda r: abs(r.midpoint - target))


@dataclass(frozen=True)
class FactorizationReport:
    params: ModelParams
    delta_P1: MultiPoly
    delta_P2: MultiPoly
    ratio: MultiPoly | None
    exponent: int
    passed: bool

    def as_dict(self) -> dict:
        return {"params": str(self.params), "ratio": str(self.ratio),
                "expected": f"a^{self.exponent}", "pass": self.passed}


def discriminant_factorization_check(params: ModelParams) -> FactorizationReport:
    """Check ΔP1 = const · a^{ell(ell+1)} · ΔP2 exactly."""
    if not params.finite:
        raise InfiniteEll("discriminants need a finite ell")
    d1 = discriminant(build_P1(params), "R", normalized=True)
    d2 = discriminant(build_P2(params), "L", normalized=True)
    ell = params.ell
    expo = ell * (ell + 1)
    try:
        ratio = d1.exact_div(d2)
    except ArithmeticError:
        return FactorizationReport(params, d1, d2, None, expo, False)
    ok = (len(ratio.terms) == 1 and
          (ratio.gens == ("a",) and next(iter(ratio.terms)) == (expo,) or expo == 0 and ratio.is_constant()))
    return FactorizationReport(params, d1, d2, ratio, expo, ok)


def ac_sweep(k: int, ells: Sequence[Ell], tol=DEFAULT_TOL) -> list[tuple[Ell, RootEnclosure]]:
    return [(ell, critical_point(ModelParams(k, ell), tol).a_c) for ell in ells]


def path_period(params: ModelParams) -> int:
    """gcd of the block lengths j+1; Z_n vanishes unless the period divides n."""
    top = params.ell if params.finite else params.k + 1
    return math.gcd(*(j + 1 for j in range(params.k, top + 1)))


def growth_ratio(params: ModelParams, a, n: int) -> float:
    """(Z_{n+p}(a)/Z_n(a))^{1/p} from enumeration, p the path period.

    A crude finite-size estimate of 1/z_c(a); it converges slowly.
    """
    p = path_period(params)
    n -= n % p
    a = Fraction(a)
    z0 = partition_polynomial(params, n).evaluate({"a": a})
    z1 = partition_polynomial(params, n + p).evaluate({"a": a})
    return float(z1 / z0) ** (1 / p)


# -- delimited output ------------------------------------------------------------

def fmt(x) -> str:
    """Fixed 12-significant-digit rendering used by every CSV emitter."""
    if isinstance(x, RootEnclosure):
        x = x.midpoint
    with localcontext() as ctx:
        ctx.prec = 40
        if isinstance(x, Fraction):
            x = Decimal(x.numerator) / Decimal(x.denominator)
        elif not isinstance(x, Decimal):
            x = Decimal(x)
        return format(+x, ".12g")


def phase_curve_rows(curve: PhaseCurve) -> list[dict]:
    return [{"a": fmt(p.a), "z_c": fmt(p.z_c), "kappa": fmt(p.kappa)} for p in curve.points]


def ac_sweep_rows(rows) -> list[dict]:
    return [{"ell": str(ell), "a_c": fmt(ac)} for ell, ac in rows]


def to_csv(rows: list[dict], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(header), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


__all__ = ["CriticalPoint", "critical_point", "critical_equation", "zc_of_a", "zc_plus",
           "free_energy", "phase_curve", "PhaseCurve", "PhasePoint", "a_grid", "crit_polynomial",
           "crit_root_near", "discriminant_factorization_check", "FactorizationReport",
           "ac_sweep", "path_period", "growth_ratio", "fmt", "phase_curve_rows", "ac_sweep_rows", "to_csv", "INF"]
