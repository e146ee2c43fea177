"""Sparse multivariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from ..errors import VariableMismatch, ZeroPolynomial

# Canonical variable order; every polynomial keeps its generators sorted by it.
GENERATORS = ("z", "a", "q", "u", "L", "R")
_RANK = {name: i for i, name in enumerate(GENERATORS)}

Scalar = Union[int, Fraction]


def _check_gens(gens: Iterable[str]) -> tuple[str, ...]:
    gens = tuple(gens)
    if len(set(gens)) != len(gens):
        raise VariableMismatch(f"duplicate variables in {gens}")
    for g in gens:
        if g not in _RANK:
            raise VariableMismatch(f"unknown variable {g!r}; allowed: {GENERATORS}")
    return tuple(sorted(gens, key=_RANK.__getitem__))


class MultiPoly:
    """Immutable sparse polynomial in ℤ[z, a, q, u, L, R].

    ``terms`` maps exponent tuples (ordered like ``gens``) to nonzero ints.
    Generators that do not occur in any term are dropped, so two equal
    polynomials always have identical ``gens`` and ``terms``.
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 gens: Iterable[str] = ()):
        gens = tuple(gens)
        if gens != _check_gens(gens):
            # reorder exponent tuples into canonical generator order
            order = sorted(range(len(gens)), key=lambda i: _RANK[gens[i]])
            gens = tuple(gens[i] for i in order)
            terms = {tuple(e[i] for i in order): c for e, c in (terms or {}).items()}
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(gens):
                raise VariableMismatch(f"exponent {e} does not match variables {gens}")
            if c:
                clean[tuple(e)] = clean.get(tuple(e), 0) + int(c)
        clean = {e: c for e, c in clean.items() if c}
        used = [i for i in range(len(gens)) if any(e[i] for e in clean)]
        if len(used) != len(gens):
            gens = tuple(gens[i] for i in used)
            clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        self.gens: tuple[str, ...] = gens
        self.terms: dict[tuple[int, ...], int] = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c} if c else {}, ())

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({(1,): 1}, (name,))

    @classmethod
    def monomial(cls, coeff: int = 1, **powers: int) -> "MultiPoly":
        gens = tuple(powers)
        return cls({tuple(powers[g] for g in gens): coeff}, gens)

    @classmethod
    def from_coeffs(cls, var: str, coeffs: Iterable["MultiPoly | int"]) -> "MultiPoly":
        """Build Σ coeffs[i]·var^i."""
        x = cls.var(var)
        out = cls.const(0)
        power = cls.const(1)
        for c in coeffs:
            out = out + _lift(c) * power
            power = power * x
        return out

    @classmethod
    def from_univariate(cls, var: str, coeffs: Iterable[int]) -> "MultiPoly":
        return cls({(i,): c for i, c in enumerate(coeffs) if c}, (var,))

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.gens

    def constant_value(self) -> int:
        if self.gens:
            raise VariableMismatch(f"{self} is not a constant")
        return self.terms.get((), 0)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.gens:
            return 0
        i = self.gens.index(var)
        return max(e[i] for e in self.terms)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """Lexicographically highest term (in canonical generator order)."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = _check_gens(set(self.gens) | set(other.gens))
        return gens, _embed(self, gens), _embed(other, gens)

    def __add__(self, other):
        other = _lift(other)
        gens, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, gens)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.gens)
        other = _lift(other)
        gens, a, b = self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        if len(gens) == 1:
            for (i,), c in a.items():
                for (j,), d in b.items():
                    k = (i + j,)
                    out[k] = out.get(k, 0) + c * d
        else:
            for e, c in a.items():
                for f, d in b.items():
                    k = tuple(x + y for x, y in zip(e, f))
                    out[k] = out.get(k, 0) + c * d
        return MultiPoly(out, gens)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: "MultiPoly | int") -> "MultiPoly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            c = other.constant_value()
            if any(v % c for v in self.terms.values()):
                raise ArithmeticError("inexact division by constant")
            return MultiPoly({e: v // c for e, v in self.terms.items()}, self.gens)
        gens, rem, div = self._aligned(other)
        rem = dict(rem)
        lead_e = max(div)
        lead_c = div[lead_e]
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            shift = tuple(x - y for x, y in zip(e, lead_e))
            if min(shift) < 0 or c % lead_c:
                raise ArithmeticError("inexact polynomial division")
            f = c // lead_c
            quot[shift] = f
            for g, d in div.items():
                k = tuple(x + y for x, y in zip(g, shift))
                v = rem.get(k, 0) - f * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MultiPoly(quot, gens)

    # -- calculus / substitution ----------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.gens:
            return MultiPoly.const(0)
        i = self.gens.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MultiPoly(out, self.gens)

    def coeffs(self, var: str) -> list["MultiPoly"]:
        """Coefficients in ``var`` as polynomials in the remaining variables."""
        if not self.terms:
            return [MultiPoly.const(0)]
        if var not in self.gens:
            return [self]
        i = self.gens.index(var)
        rest = self.gens[:i] + self.gens[i + 1:]
        buckets: list[dict] = [{} for _ in range(self.degree(var) + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        return [MultiPoly(b, rest) for b in buckets]

    def coeff(self, var: str, power: int) -> "MultiPoly":
        cs = self.coeffs(var)
        return cs[power] if 0 <= power < len(cs) else MultiPoly.const(0)

    def univariate(self, var: str | None = None) -> list[int]:
        """Integer coefficient list (low degree first) of a univariate polynomial."""
        if not self.gens:
            return [self.constant_value()] if self.terms else [0]
        if len(self.gens) != 1 or (var is not None and self.gens[0] != var):
            raise VariableMismatch(f"{self} is not univariate in {var or 'one variable'}")
        out = [0] * (self.degree() + 1)
        for (i,), c in self.terms.items():
            out[i] = c
        return out

    def subs(self, var: str, value: "MultiPoly | int") -> "MultiPoly":
        """Substitute a polynomial (or integer) for ``var``."""
        if var not in self.gens:
            return self
        cs = self.coeffs(var)
        value = _lift(value)
        out = cs[-1]
        for c in reversed(cs[:-1]):
            out = out * value + c
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every variable must be assigned."""
        missing = [g for g in self.gens if g not in point]
        if missing:
            raise VariableMismatch(f"no value given for {missing}")
        vals = [Fraction(point[g]) for g in self.gens]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def evaluate_int(self, point: Mapping[str, int]) -> int:
        vals = [point[g] for g in self.gens]
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    # -- formatting / serialization -------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            mono = "*".join(g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json_obj(self, gens: Iterable[str] | None = None) -> dict:
        """``{"vars": [...], "terms": {"e1,e2": coeff}}`` with exponents in ``vars`` order."""
        gens = tuple(gens) if gens is not None else self.gens
        missing = set(self.gens) - set(gens)
        if missing:
            raise VariableMismatch(f"cannot serialize over {gens}: uses {sorted(missing)}")
        idx = [self.gens.index(g) if g in self.gens else None for g in gens]
        terms = {}
        for e, c in sorted(self.terms.items()):
            key = ",".join(str(e[i]) if i is not None else "0" for i in idx)
            terms[key] = c
        return {"vars": list(gens), "terms": terms}

    def to_json(self, gens: Iterable[str] | None = None) -> str:
        return json.dumps(self.to_json_obj(gens), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MultiPoly":
        gens = tuple(obj["vars"])
        terms = {}
        for key, c in obj["terms"].items():
            e = tuple(int(x) for x in key.split(",")) if key else ()
            terms[e] = int(c)
        return cls(terms, gens)


def _lift(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(x)
    raise TypeError(f"cannot convert {type(x).__name__} to MultiPoly")


def _embed(p: MultiPoly, gens: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    idx = [p.gens.index(g) if g in p.gens else None for g in gens]
    return {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in p.terms.items()}


def primitive_normalize(p: MultiPoly) -> MultiPoly:
    """Divide out the integer content and make the leading (lex) coefficient positive."""
    if p.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    g = p.content()
    _, lead = p.leading_term()
    if lead < 0:
        g = -g
    return p.exact_div(g)


def symbols(names: str) -> tuple[MultiPoly, ...]:
    """``symbols("z a")`` -> (z, a) as polynomials."""
    return tuple(MultiPoly.var(n) for n in names.split())
