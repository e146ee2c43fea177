"""Dense univariate integer polynomials (coefficient lists, low degree first).

These back the q-series machinery, where every coefficient is a polynomial
or rational function in a single variable q, and the root isolator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list  # list[int], low degree first; [] is zero


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[int]) -> int:
    return len(trim(p)) - 1


def add(p: Sequence[int], r: Sequence[int]) -> Poly:
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for i, c in enumerate(r):
        out[i] += c
    return trim(out)


def neg(p: Sequence[int]) -> Poly:
    return [-c for c in p]


def sub(p: Sequence[int], r: Sequence[int]) -> Poly:
    return add(p, neg(r))


def scale(p: Sequence[int], c: int) -> Poly:
    return trim([c * x for x in p]) if c else []


def shift(p: Sequence[int], k: int) -> Poly:
    """Multiply by x^k."""
    return [0] * k + list(p) if p else []


def mul(p: Sequence[int], r: Sequence[int]) -> Poly:
    if not p or not r:
        return []
    out = [0] * (len(p) + len(r) - 1)
    for i, c in enumerate(p):
        if c:
            for j, d in enumerate(r):
                out[i + j] += c * d
    return trim(out)


def power(p: Sequence[int], n: int) -> Poly:
    out: Poly = [1]
    for _ in range(n):
        out = mul(out, p)
    return out


def dilate(p: Sequence[int], m: int) -> Poly:
    """p(x^m)."""
    if not p:
        return []
    out = [0] * (m * (len(p) - 1) + 1)
    for i, c in enumerate(p):
        out[m * i] = c
    return out


def evaluate(p: Sequence[int], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence[int]) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Sequence[int]) -> Poly:
    p = trim(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def divmod_exact(p: Sequence[int], d: Sequence[int]) -> tuple[Poly, Poly]:
    """Division over ℤ; raises ArithmeticError unless the quotient is integral."""
    p, d = trim(p), trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [0] * max(len(p) - len(d) + 1, 0)
    lead = d[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(d) - 1]
        if c:
            if c % lead:
                raise ArithmeticError("non-integral polynomial quotient")
            f = c // lead
            quot[i] = f
            for j, e in enumerate(d):
                rem[i + j] -= f * e
    return trim(quot), trim(rem)


def exact_div(p: Sequence[int], d: Sequence[int]) -> Poly:
    q, r = divmod_exact(p, d)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def pseudo_rem(p: Sequence[int], d: Sequence[int]) -> Poly:
    p, d = trim(p), trim(d)
    rem = list(p)
    lead = d[-1]
    while len(rem) >= len(d) and rem:
        c = rem[-1]
        k = len(rem) - len(d)
        rem = [lead * x for x in rem]
        for j, e in enumerate(d):
            rem[k + j] -= c * e
        rem = trim(rem)
    return rem


def poly_gcd(p: Sequence[int], r: Sequence[int]) -> Poly:
    """gcd in ℤ[x] via the primitive remainder sequence; positive leading coefficient."""
    p, r = trim(p), trim(r)
    if not p:
        return scale(primitive(r), content(r))
    if not r:
        return scale(primitive(p), content(p))
    c = gcd(content(p), content(r))
    p, r = primitive(p), primitive(r)
    if len(p) < len(r):
        p, r = r, p
    while r:
        p, r = r, primitive(pseudo_rem(p, r))
    return scale(p, c)


def squarefree_part(p: Sequence[int]) -> Poly:
    g = poly_gcd(p, derivative(p))
    return primitive(exact_div(primitive(p), primitive(g)))


def sign_changes(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def to_str(p: Sequence[int], var: str = "q") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = (str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}"))
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        text += f" {s} {b}"
    return text


class RationalQFunction:
    """Reduced quotient of integer polynomials in q with positive-leading denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: Sequence[int] = (1,), reduce: bool = True):
        num, den = trim(num), trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = [1]
        elif reduce:
            g = poly_gcd(num, den)
            num, den = exact_div(num, g), exact_div(den, g)
        if den[-1] < 0:
            num, den = neg(num), neg(den)
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def from_int(cls, c: int) -> "RationalQFunction":
        return cls([c], [1])

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RationalQFunction.from_int(other)
        if not isinstance(other, RationalQFunction):
            return NotImplemented
        return mul(self.num, other.den) == mul(other.num, self.den)

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __add__(self, other):
        other = _lift(other)
        return RationalQFunction(add(mul(self.num, other.den), mul(other.num, self.den)),
                                 mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalQFunction(neg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __mul__(self, other):
        other = _lift(other)
        return RationalQFunction(mul(self.num, other.num), mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalQFunction(mul(self.num, other.den), mul(self.den, other.num))

    def dilate(self, m: int) -> "RationalQFunction":
        """f(q^m)."""
        return RationalQFunction(dilate(self.num, m), dilate(self.den, m), reduce=False)

    def times_qpower(self, k: int) -> "RationalQFunction":
        return RationalQFunction(shift(self.num, k), self.den)

    def evaluate(self, q) -> Fraction:
        d = evaluate(self.den, q)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q}")
        return evaluate(self.num, q) / d

    def power_series(self, order: int) -> list[Fraction]:
        """Expansion in q through q^order (requires den(0) != 0)."""
        if not self.den or self.den[0] == 0:
            raise ZeroDivisionError("denominator vanishes at q = 0")
        d0 = Fraction(self.den[0])
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = Fraction(self.num[n] if n < len(self.num) else 0)
            for i in range(1, min(n, len(self.den) - 1) + 1):
                acc -= self.den[i] * out[n - i]
            out.append(acc / d0)
        return out

    def to_json_obj(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    def __str__(self) -> str:
        if self.den == [1]:
            return to_str(self.num)
        return f"({to_str(self.num)})/({to_str(self.den)})"

    __repr__ = __str__


def _lift(x) -> RationalQFunction:
    if isinstance(x, RationalQFunction):
        return x
    if isinstance(x, int):
        return RationalQFunction.from_int(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RationalQFunction")
