"""(k, ell)-restricted Lukasiewicz paths: validation, weights and brute-force enumeration.

Enumeration here is deliberately naive; it is the oracle every generating
function in the package is checked against.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (NegativeHeight, NonzeroFinalHeight, ResourceLimit, StepOutOfRange)
from .exactalg import MultiPoly

DEFAULT_CAP = 10**7


class Infinity(enum.Enum):
    """Marker for an unbounded maximal jump height."""

    INF = "inf"

    def __str__(self) -> str:
        return "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Infinity.INF
Ell = Union[int, Infinity]


@dataclass(frozen=True)
class ModelParams:
    k: int
    ell: Ell

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k!r}")
        if self.ell is not INF:
            if not isinstance(self.ell, int) or self.ell < 0:
                raise ValueError(f"ell must be a non-negative integer or INF, got {self.ell!r}")
            if self.k > self.ell:
                raise ValueError(f"need k <= ell, got k={self.k}, ell={self.ell}")

    @property
    def finite(self) -> bool:
        return self.ell is not INF

    def allows(self, jump: int) -> bool:
        return jump >= self.k and (self.ell is INF or jump <= self.ell)

    def jump_range(self, cap: int) -> range:
        """Allowed jump heights, truncated at ``cap`` for an infinite ell."""
        top = cap if self.ell is INF else min(self.ell, cap)
        return range(self.k, top + 1)

    @classmethod
    def parse(cls, k, ell) -> "ModelParams":
        if isinstance(ell, str):
            ell = INF if ell.strip().lower() in ("inf", "infinity", "∞") else int(ell)
        return cls(int(k), ell)

    def __str__(self) -> str:
        return f"({self.k},{self.ell})"


@dataclass(frozen=True)
class LukaPath:
    params: ModelParams
    steps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        """Heights y_0 .. y_n."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps(list(self.steps))


@dataclass(frozen=True)
class PathWeights:
    length: int
    contacts: int
    area: int


def validate(params: ModelParams, steps: Sequence[int]) -> LukaPath:
    h = 0
    for i, s in enumerate(steps):
        if s != -1 and not params.allows(s):
            raise StepOutOfRange(f"step {i} = {s} is neither -1 nor a jump in {params}")
        h += s
        if h < 0:
            raise NegativeHeight(f"path goes below the surface after step {i}")
    if h != 0:
        raise NonzeroFinalHeight(f"path ends at height {h}")
    return LukaPath(params, tuple(steps))


def weights(path: LukaPath) -> PathWeights:
    hs = path.heights
    return PathWeights(len(path.steps), sum(1 for y in hs[1:] if y == 0), sum(hs))


def _walk(params: ModelParams, n: int):
    """Yield (steps, contacts, area) for every valid length-n path by depth-first search."""
    steps: list[int] = []

    def rec(h: int, left: int, contacts: int, area: int):
        if left == 0:
            yield tuple(steps), contacts, area
            return
        if h > 0:
            steps.append(-1)
            yield from rec(h - 1, left - 1, contacts + (h == 1), area + h - 1)
            steps.pop()
        # a jump to h + j must be undone by h + j later down steps
        for j in params.jump_range(left - 1 - h):
            steps.append(j)
            yield from rec(h + j, left - 1, contacts + (h + j == 0), area + h + j)
            steps.pop()

    yield from rec(0, n, 0, 0)


def iter_paths(params: ModelParams, n: int, cap: int = DEFAULT_CAP) -> Iterator[LukaPath]:
    if n < 0:
        raise ValueError("length must be non-negative")
    for count, (steps, _, _) in enumerate(_walk(params, n), 1):
        if count > cap:
            raise ResourceLimit(f"more than {cap} paths of length {n} in {params}")
        yield LukaPath(params, steps)


def enumerate_paths(params: ModelParams, n: int, cap: int = DEFAULT_CAP) -> frozenset[LukaPath]:
    return frozenset(iter_paths(params, n, cap))


def count_paths(params: ModelParams, n: int, cap: int = DEFAULT_CAP) -> int:
    return sum(1 for _ in iter_paths(params, n, cap))


def partition_polynomial(params: ModelParams, n: int, with_area: bool = False,
                         cap: int = DEFAULT_CAP) -> MultiPoly:
    """Z_n(a) = Σ a^contacts, or Z_n(a, q) = Σ a^contacts q^area, over length-n paths."""
    if n < 0:
        raise ValueError("length must be non-negative")
    tally: Counter = Counter()
    for count, (_, contacts, area) in enumerate(_walk(params, n), 1):
        if count > cap:
            raise ResourceLimit(f"more than {cap} paths of length {n} in {params}")
        tally[(contacts, area) if with_area else (contacts,)] += 1
    return MultiPoly(dict(tally), ("a", "q") if with_area else ("a",))


def weight_polynomial_json(poly: MultiPoly, with_area: bool = False) -> str:
    return poly.to_json(("a", "q") if with_area else ("a",))
