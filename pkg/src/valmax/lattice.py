"""Integer lattice primitives on Z^p.

Points are plain tuples of ints. Index sets are 0-based: coordinate ``i`` of
a point ``v`` is ``v[i]``, and an index set is any iterable of such indices.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

Point = Tuple[int, ...]

MAX_P = 8
COORD_LIMIT = 10**6


class DimensionError(ValueError):
    pass


def set_coord_limit(limit: int) -> None:
    global COORD_LIMIT
    if limit < 1:
        raise ValueError("coordinate limit must be positive")
    COORD_LIMIT = int(limit)


def point(coords: Iterable[int]) -> Point:
    """Build a point, rejecting non-integers and out-of-range magnitudes."""
    out = []
    for c in coords:
        if isinstance(c, bool):
            raise TypeError(f"coordinate {c!r} is not an integer")
        # numpy integers pass, floats do not
        c = operator.index(c)
        if abs(c) > COORD_LIMIT:
            raise OverflowError(f"coordinate {c} exceeds limit {COORD_LIMIT}")
        out.append(c)
    if not out:
        raise DimensionError("points need at least one coordinate")
    return tuple(out)


def _same_dim(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return len(a)


def inf(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def sup(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def add(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return point(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return point(x - y for x, y in zip(a, b))


def shift(a: Point, k: int) -> Point:
    """``a + k*(1,...,1)``."""
    return point(x + k for x in a)


def leq(a: Point, b: Point) -> bool:
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def unit(p: int, i: int) -> Point:
    return tuple(1 if j == i else 0 for j in range(p))


def zero(p: int) -> Point:
    return (0,) * p


def index_set(J: Iterable[int], p: int) -> frozenset:
    """Validate an index set against dimension ``p``."""
    items = list(J)
    out = frozenset(items)
    if len(out) != len(items):
        raise ValueError(f"duplicate indices in {items}")
    for j in out:
        if not 0 <= j < p:
            raise ValueError(f"index {j} out of range for p={p}")
    return out


def mask(J: Iterable[int]) -> int:
    m = 0
    for j in J:
        m |= 1 << j
    return m


def from_mask(m: int, p: int) -> frozenset:
    return frozenset(j for j in range(p) if m >> j & 1)


def proper_subsets(p: int) -> list:
    """Bitmasks of all nonempty proper subsets of {0,...,p-1}."""
    return list(range(1, (1 << p) - 1))


def in_delta_J(v: Point, alpha: Point, J: Iterable[int]) -> bool:
    """v agrees with alpha on J and is strictly larger off J."""
    p = _same_dim(v, alpha)
    J = index_set(J, p)
    if not J:
        raise ValueError("empty index set")
    for j in range(p):
        if j in J:
            if v[j] != alpha[j]:
                return False
        elif v[j] <= alpha[j]:
            return False
    return True


def in_delta(v: Point, alpha: Point) -> bool:
    p = _same_dim(v, alpha)
    equal = [j for j in range(p) if v[j] == alpha[j]]
    if len(equal) != 1:
        return False
    return all(v[j] > alpha[j] for j in range(p) if j != equal[0])


@dataclass(frozen=True)
class Box:
    lo: Point
    hi: Point

    def __post_init__(self):
        _same_dim(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise ValueError(f"empty box {self.lo}..{self.hi}")

    @property
    def p(self) -> int:
        return len(self.lo)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(h - l + 1 for l, h in zip(self.lo, self.hi))

    def __len__(self) -> int:
        n = 1
        for s in self.shape:
            n *= s
        return n

    def __iter__(self) -> Iterator[Point]:
        # lexicographic ascending
        ranges = [range(l, h + 1) for l, h in zip(self.lo, self.hi)]
        return iter(itertools.product(*ranges))

    def __contains__(self, v) -> bool:
        return len(v) == self.p and leq(self.lo, v) and leq(v, self.hi)

    def clamp(self, v: Point) -> Point:
        return inf(sup(v, self.lo), self.hi)


def box_array(lo: Sequence[int], hi: Sequence[int]):
    """All points of the box [lo, hi] as an (n, p) int64 array, lex order."""
    import numpy as np

    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    if any(len(a) == 0 for a in axes):
        return np.zeros((0, len(lo)), dtype=np.int64)
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)
