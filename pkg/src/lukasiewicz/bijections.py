"""Three bijections between Lukasiewicz paths and Dyck / Motzkin paths.

* rise:    (k,ell)-paths of length n  <->  Dyck paths of length 2n whose maximal
           rises have length in [k+1, ell+1]; contacts are preserved.
* motzkin: (1,inf)-paths of length n or n+1  <->  Motzkin paths of length n.
* area:    (0,inf)-paths of length n and area m  <->  Dyck paths of length 2n
           and area 2m+n; contacts are preserved.

Everything here is small and direct; ``verify_bijection`` checks the maps by
exhaustive enumeration of both sides.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import (InvalidPath, NegativeHeight, NonzeroFinalHeight, NotAJumpStep,
                     ResourceLimit, RiseRestrictionViolated, StepOutOfRange, WrongModel)
from .exactalg import MultiPoly
from .paths import (DEFAULT_CAP, INF, Ell, LukaPath, ModelParams, enumerate_paths,
                    validate, weights)

MOTZKIN_PARAMS = ModelParams(1, INF)
AREA_PARAMS = ModelParams(0, INF)

_DELTA = {"U": 1, "D": -1, "H": 0}


def _heights(steps: str) -> tuple[int, ...]:
    out = [0]
    for s in steps:
        out.append(out[-1] + _DELTA[s])
    return tuple(out)


def _check_lattice(steps: str, alphabet: str):
    h = 0
    for i, s in enumerate(steps):
        if s not in alphabet:
            raise StepOutOfRange(f"step {i} = {s!r} is not one of {alphabet}")
        h += _DELTA[s]
        if h < 0:
            raise NegativeHeight(f"path goes below the surface after step {i}")
    if h:
        raise NonzeroFinalHeight(f"path ends at height {h}")


class _Lattice:
    steps: str

    @property
    def heights(self) -> tuple[int, ...]:
        return _heights(self.steps)

    @property
    def contacts(self) -> int:
        return sum(1 for y in self.heights[1:] if y == 0)

    @property
    def area(self) -> int:
        return sum(self.heights)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class DyckPath(_Lattice):
    steps: str

    def __post_init__(self):
        _check_lattice(self.steps, "UD")


@dataclass(frozen=True)
class MotzkinPath(_Lattice):
    steps: str

    def __post_init__(self):
        _check_lattice(self.steps, "UDH")


@dataclass(frozen=True)
class RiseRestriction:
    lo: int
    hi: Ell

    def allows(self, r: int) -> bool:
        return r >= self.lo and (self.hi is INF or r <= self.hi)

    @classmethod
    def shifted(cls, params: ModelParams) -> "RiseRestriction":
        return cls(params.k + 1, INF if params.ell is INF else params.ell + 1)


# -- rise bijection --------------------------------------------------------------

@dataclass(frozen=True)
class Rise:
    start: int      # index of the first up step
    length: int
    hook_end: int   # index of the down step closing the hook

    @property
    def hook_length(self) -> int:
        return self.length + 1


def rise_decompose(d: DyckPath) -> list[Rise]:
    out = []
    s = d.steps
    i = 0
    while i < len(s):
        if s[i] == "U":
            j = i
            while s[j] == "U":
                j += 1
            out.append(Rise(i, j - i, j))
            i = j
        else:
            i += 1
    return out


def is_rise_restricted(d: DyckPath, window: RiseRestriction) -> bool:
    return all(window.allows(r.length) for r in rise_decompose(d))


def luka_to_rise_dyck(l: LukaPath) -> DyckPath:
    # jump j -> hook U^{j+1} D; a down step stays a down step
    return DyckPath("".join("D" if s < 0 else "U" * (s + 1) + "D" for s in l.steps))


def rise_dyck_to_luka(d: DyckPath, params: ModelParams) -> LukaPath:
    window = RiseRestriction.shifted(params)
    steps: list[int] = []
    s = d.steps
    i = 0
    while i < len(s):
        if s[i] == "D":
            steps.append(-1)
            i += 1
            continue
        j = i
        while s[j] == "U":
            j += 1
        r = j - i
        if not window.allows(r):
            raise RiseRestrictionViolated(f"rise of length {r} at {i} outside [{window.lo}, {window.hi}]")
        steps.append(r - 1)
        i = j + 1  # the down step closing the hook is absorbed
    return validate(params, steps)


# -- horizontal visibility and the Motzkin bijection -----------------------------

def right_visible(l: LukaPath, i: int) -> list[int]:
    """Down steps where the path first drops back through each level the jump at i crossed."""
    j = l.steps[i]
    if j < 0:
        raise NotAJumpStep(f"step {i} is a down step")
    hs = l.heights
    h = hs[i]
    out = []
    target = h + j - 1
    for t in range(i + 1, len(l.steps)):
        if target < h:
            break
        if hs[t + 1] == target and l.steps[t] == -1:
            out.append(t)
            target -= 1
    return out


def _require(params: ModelParams, want: ModelParams, what: str):
    if params != want:
        raise WrongModel(f"{what} is defined for {want}, got {params}")


def motzkin_map(l: LukaPath, n: int) -> MotzkinPath:
    """Γ_n on L_n ∪ L_{n+1}.

    On L_n every jump is replaced by an up step and all but the last of its
    right-visible down steps become horizontal.  On L_{n+1} the leftmost jump
    (always step 0) is deleted and all of its visible down steps become horizontal.
    """
    _require(l.params, MOTZKIN_PARAMS, "the Motzkin bijection")
    if len(l) not in (n, n + 1):
        raise ValueError(f"path of length {len(l)} is not in L_{n} ∪ L_{n + 1}")
    out = ["D" if s < 0 else "U" for s in l.steps]
    drop = 0 if len(l) == n + 1 else None
    for i, s in enumerate(l.steps):
        if s < 0:
            continue
        vis = right_visible(l, i)
        for t in (vis if i == drop else vis[:-1]):
            out[t] = "H"
    if drop is not None:
        del out[drop]
    return MotzkinPath("".join(out))


def motzkin_inverse(m: MotzkinPath) -> LukaPath:
    steps = m.steps
    hs = m.heights
    jump = [0] * len(steps)
    surface = 0
    stack: list[int] = []
    for t, s in enumerate(steps):
        if s == "U":
            stack.append(t)
        elif s == "D":
            stack.pop()
        elif hs[t] == 0:
            surface += 1
        else:
            jump[stack[-1]] += 1
    body = [jump[t] + 1 if s == "U" else -1 for t, s in enumerate(steps)]
    if surface:
        body = [surface] + body
    return validate(MOTZKIN_PARAMS, body)


# -- area bijection ---------------------------------------------------------------

def area_luka_to_dyck(l: LukaPath) -> DyckPath:
    _require(l.params, AREA_PARAMS, "the area bijection")
    n = len(l)
    hs = l.heights
    out = ["U"] * (2 * n)
    for i in range(1, n + 1):
        out[2 * i + hs[i] - 1] = "D"
    return DyckPath("".join(out))


def area_dyck_to_luka(d: DyckPath) -> LukaPath:
    n = len(d) // 2
    hs = d.heights
    h = [0] * (n + 1)
    for t, s in enumerate(d.steps):
        if s == "D":
            # down step from vertex t at height hs[t] comes from v_i with 2i + h_i - 1 = t
            i = (t - hs[t]) // 2 + 1
            h[i] = hs[t] - 1
    return validate(AREA_PARAMS, [h[i] - h[i - 1] for i in range(1, n + 1)])


# -- enumeration -----------------------------------------------------------------

def _lattice_words(length: int, alphabet: str) -> Iterator[str]:
    buf: list[str] = []

    def rec(h: int, left: int):
        if left == 0:
            if h == 0:
                yield "".join(buf)
            return
        for s in alphabet:
            nh = h + _DELTA[s]
            if 0 <= nh <= left - 1:
                buf.append(s)
                yield from rec(nh, left - 1)
                buf.pop()

    yield from rec(0, length)


def iter_dyck(n: int, cap: int = DEFAULT_CAP) -> Iterator[DyckPath]:
    """Dyck paths of length 2n."""
    for c, w in enumerate(_lattice_words(2 * n, "UD"), 1):
        if c > cap:
            raise ResourceLimit(f"more than {cap} Dyck paths of length {2 * n}")
        yield DyckPath(w)


def iter_motzkin(n: int, cap: int = DEFAULT_CAP) -> Iterator[MotzkinPath]:
    for c, w in enumerate(_lattice_words(n, "UHD"), 1):
        if c > cap:
            raise ResourceLimit(f"more than {cap} Motzkin paths of length {n}")
        yield MotzkinPath(w)


def motzkin_number(n: int) -> int:
    # (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}
    m = [1, 1]
    for i in range(2, n + 1):
        m.append(((2 * i + 1) * m[-1] + 3 * (i - 1) * m[-2]) // (i + 2))
    return m[n]


def dyck_weight_polynomial(paths, area_map: Callable[[int], int] = lambda m: m) -> MultiPoly:
    """Σ a^contacts q^area_map(area) over the given Dyck paths."""
    tally = Counter((d.contacts, area_map(d.area)) for d in paths)
    return MultiPoly(dict(tally), ("a", "q"))


# -- exhaustive verification -------------------------------------------------------

@dataclass
class BijectionReport:
    kind: str
    params: ModelParams
    n: int
    source_count: int = 0
    target_count: int = 0
    passed: bool = True
    counterexample: str | None = None
    extra: dict = field(default_factory=dict)

    def fail(self, msg: str):
        if self.passed:
            self.passed = False
            self.counterexample = msg

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "params": str(self.params), "n": self.n,
             "source_count": self.source_count, "target_count": self.target_count,
             "pass": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def _verify(report: BijectionReport, source, forward, inverse, target: set, laws):
    images = {}
    for l in source:
        try:
            img = forward(l)
        except InvalidPath as e:
            report.fail(f"{list(l.steps)} has no valid image: {e}")
            continue
        if img in images:
            report.fail(f"{list(l.steps)} and {list(images[img].steps)} both map to {img}")
        images[img] = l
        if img not in target:
            report.fail(f"{list(l.steps)} maps to {img}, outside the target set")
        back = inverse(img)
        if back.steps != l.steps:
            report.fail(f"{list(l.steps)} -> {img} -> {list(back.steps)}")
        for name, ok in laws:
            if not ok(l, img):
                report.fail(f"{name} fails for {list(l.steps)} -> {img}")
    report.source_count = len(source)
    report.target_count = len(target)
    if set(images) != target:
        missed = sorted(str(t) for t in target - set(images))
        report.fail(f"not surjective; e.g. {missed[0]} has no preimage" if missed
                    else "image count differs from target count")


def _same_contacts(l, img) -> bool:
    return weights(l).contacts == img.contacts


def verify_bijection(kind: str, params: ModelParams | None, n: int,
                     cap: int = DEFAULT_CAP) -> BijectionReport:
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "rise":
        if params is None:
            raise ValueError("the rise bijection needs (k, ell)")
        window = RiseRestriction.shifted(params)
        report = BijectionReport(kind, params, n)
        source = list(enumerate_paths(params, n, cap))
        target = {d for d in iter_dyck(n, cap) if is_rise_restricted(d, window)}
        _verify(report, source, luka_to_rise_dyck, lambda d: rise_dyck_to_luka(d, params), target,
                [("contact preservation", _same_contacts),
                 ("rise window", lambda l, d: is_rise_restricted(d, window))])
        return report
    if kind == "motzkin":
        params = MOTZKIN_PARAMS if params is None else params
        _require(params, MOTZKIN_PARAMS, "the Motzkin bijection")
        report = BijectionReport(kind, params, n)
        short = list(enumerate_paths(params, n, cap))
        long = list(enumerate_paths(params, n + 1, cap))
        target = set(iter_motzkin(n, cap))
        _verify(report, short + long, lambda l: motzkin_map(l, n), motzkin_inverse, target,
                [("length", lambda l, m: len(m) == n),
                 ("surface horizontals mark L_{n+1}",
                  lambda l, m: (len(l) == n + 1) == any(s == "H" and h == 0
                                                        for s, h in zip(m.steps, m.heights)))])
        report.extra = {"L_n": len(short), "L_n+1": len(long), "motzkin_number": motzkin_number(n)}
        if len(short) + len(long) != motzkin_number(n):
            report.fail(f"|L_n| + |L_n+1| = {len(short) + len(long)} != M_n = {motzkin_number(n)}")
        return report
    if kind == "area":
        params = AREA_PARAMS if params is None else params
        _require(params, AREA_PARAMS, "the area bijection")
        report = BijectionReport(kind, params, n)
        source = list(enumerate_paths(params, n, cap))
        target = set(iter_dyck(n, cap))
        _verify(report, source, area_luka_to_dyck, area_dyck_to_luka, target,
                [("contact preservation", _same_contacts),
                 ("area law", lambda l, d: d.area == 2 * weights(l).area + n)])
        return report
    raise ValueError(f"unknown bijection {kind!r}")


__all__ = ["DyckPath", "MotzkinPath", "RiseRestriction", "Rise", "rise_decompose",
           "is_rise_restricted", "luka_to_rise_dyck", "rise_dyck_to_luka", "right_visible",
           "motzkin_map", "motzkin_inverse", "area_luka_to_dyck",
           "area_dyck_to_luka", "iter_dyck", "iter_motzkin", "motzkin_number",
           "dyck_weight_polynomial", "BijectionReport", "verify_bijection"]
