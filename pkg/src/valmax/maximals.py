"""Maximals of good ideals and the symmetry between relative maximals of E
and absolute maximals of its dual."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .core import GoodIdeal
from .duality import dual
from .lattice import Point, index_set, mask


@dataclass
class MaximalsReport:
    maximals: frozenset
    absolute: frozenset
    relative: frozenset
    pairs: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "maximals": sorted(map(list, self.maximals)),
            "absolute": sorted(map(list, self.absolute)),
            "relative": sorted(map(list, self.relative)),
            "pairs": self.pairs,
        }


def delta_empty(E: GoodIdeal, alpha, J) -> bool:
    """True iff no member of E lies in Δ_J(alpha, Z^p)."""
    J = index_set(J, E.p)
    if not J:
        raise ValueError("empty index set")
    return not E.delta_profile([tuple(alpha)])[0, mask(J)]


def _singletons(p):
    return [1 << i for i in range(p)]


def _proper(p):
    return list(range(1, (1 << p) - 1))


def _big(p):
    return [m for m in range(1 << p) if bin(m).count("1") >= 2]


def _flags(prof: np.ndarray, p: int):
    maximal = ~prof[:, _singletons(p)].any(axis=1)
    absolute = ~prof[:, _proper(p)].any(axis=1) if p > 1 else np.zeros(len(prof), bool)
    big = _big(p)
    relative = maximal & (prof[:, big].all(axis=1) if big else True)
    if p == 1:
        maximal = np.zeros(len(prof), bool)
        relative = maximal
    return maximal, absolute, relative


def classify_maximals(E: GoodIdeal) -> MaximalsReport:
    """Classify every maximal.  Maximals are members with Δ empty, hence lie
    strictly below the conductor and among the small elements."""
    p = E.p
    U = E.small_array
    prof = E.delta_profile(U)
    maximal, absolute, relative = _flags(prof, p)
    g = np.asarray(E.gammaE)
    # a maximal touching the conductor would mean the scan window is wrong
    assert not np.any(U[maximal] >= g), "maximal on the conductor boundary"
    gamma = E.ambient.gamma
    pairs = []
    for k in np.flatnonzero(maximal):
        a = tuple(map(int, U[k]))
        pairs.append({
            "alpha": list(a),
            "beta": [c - x - 1 for c, x in zip(gamma, a)],
            "absolute": bool(absolute[k]),
            "relative": bool(relative[k]),
        })
    as_set = lambda flags: frozenset(tuple(map(int, U[k])) for k in np.flatnonzero(flags))
    return MaximalsReport(as_set(maximal), as_set(absolute & maximal), as_set(relative), pairs)


def absolute_maximals(E: GoodIdeal) -> frozenset:
    return classify_maximals(E).absolute


def relative_maximals(E: GoodIdeal) -> frozenset:
    return classify_maximals(E).relative


def is_relative_maximal_by_criterion(E: GoodIdeal, alpha, i: int) -> bool:
    """Δ_i(alpha) empty and Δ_{i,j}(alpha) nonempty for every j != i."""
    p = E.p
    if not 0 <= i < p:
        raise ValueError(f"index {i} out of range")
    prof = E.delta_profile([tuple(alpha)])[0]
    if prof[1 << i]:
        return False
    return all(prof[(1 << i) | (1 << j)] for j in range(p) if j != i)


@dataclass
class Verdict:
    check: str
    alpha: Point
    beta: Point
    holds: bool

    def to_dict(self) -> dict:
        return {"check": self.check, "alpha": list(self.alpha), "beta": list(self.beta),
                "verdict": "holds" if self.holds else "violated"}


@dataclass
class SymmetryReport:
    verdicts: List[Verdict]
    skipped: int

    @property
    def ok(self) -> bool:
        return all(v.holds for v in self.verdicts)

    @property
    def violations(self) -> list:
        return [v for v in self.verdicts if not v.holds]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "skipped": self.skipped,
                "verdicts": [v.to_dict() for v in self.verdicts]}


def symmetry_check(E: GoodIdeal, D: Optional[GoodIdeal] = None) -> SymmetryReport:
    """Check, pair by pair, that β = γ - α - 1 is an absolute maximal of the
    dual exactly when α is a relative maximal of E.

    Members α whose reflection is not in the dual carry no claim and are only
    counted.  Also checks the one-way implication for relative maximals and
    that Δ_A(β, dual) vanishes for all proper A whenever every Δ_J(α, E) with
    |J| >= 2 is nonempty.
    """
    p = E.p
    if D is None:
        D = dual(E).dual
    gamma = np.asarray(E.ambient.gamma, dtype=np.int64)
    U = E.small_array
    B = gamma - U - 1
    profE = E.delta_profile(U)
    profD = D.delta_profile(B)
    _, _, relE = _flags(profE, p)
    in_D = D.contains_many(B)
    maxD = ~profD[:, _singletons(p)].any(axis=1)
    absD = in_D & ~profD[:, _proper(p)].any(axis=1) & (maxD if p > 1 else False)
    big = _big(p)
    all_big = profE[:, big].all(axis=1) if big else np.ones(len(U), bool)
    verdicts = []
    skipped = 0
    for k in range(len(U)):
        a = tuple(map(int, U[k]))
        b = tuple(map(int, B[k]))
        if all_big[k] and p > 1:
            verdicts.append(Verdict("delta-vanishing", a, b, not profD[k, _proper(p)].any()))
        if not in_D[k]:
            skipped += 1
            continue
        if p < 2:
            continue
        if relE[k]:
            verdicts.append(Verdict("relative-implies-absolute", a, b, bool(absD[k])))
        verdicts.append(Verdict("symmetry", a, b, bool(absD[k]) == bool(relE[k])))
    # absolute maximals of the dual reflect back into E as relative maximals
    if p >= 2:
        rE = classify_maximals(E).relative
        for beta in classify_maximals(D).absolute:
            a = tuple(int(c - x - 1) for c, x in zip(gamma, beta))
            verdicts.append(Verdict("reflection", a, beta, E.contains(a) and a in rE))
    return SymmetryReport(verdicts, skipped)


def relmax_from_dual(E: GoodIdeal, D: Optional[GoodIdeal] = None) -> frozenset:
    """Relative maximals of E, read off the absolute maximals of its dual."""
    if D is None:
        D = dual(E).dual
    gamma = E.ambient.gamma
    return frozenset(tuple(c - x - 1 for c, x in zip(gamma, b)) for b in classify_maximals(D).absolute)
