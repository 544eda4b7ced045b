"""Duals of good ideals, canonical value sets and the Gorenstein test.

The dual of E is the set of v with Δ(γ - v - 1, E) empty, γ the conductor of
the ambient semigroup.  Below γ - gammaE(E) nothing is in the dual, and every
point above γ - min(E) is, so the scan only covers that window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EQ,
    GT,
    GoodIdeal,
    GoodSemigroup,
    NormalizationError,
    ideal_from_members,
    validate,
)
from .lattice import Point, box_array


class DualError(RuntimeError):
    pass


@dataclass(frozen=True)
class DualResult:
    dual: GoodIdeal
    gamma_used: Point


def singleton_patterns(p: int) -> np.ndarray:
    return np.array([[EQ if j == i else GT for j in range(p)] for i in range(p)], dtype=np.int64)


def dual_members(E: GoodIdeal, V) -> np.ndarray:
    """Vectorised membership in the dual for the points V."""
    V = np.asarray(V, dtype=np.int64).reshape(-1, E.p)
    gamma = np.asarray(E.ambient.gamma, dtype=np.int64)
    W = gamma - V - 1
    return ~E.pattern_exists(W, singleton_patterns(E.p)).any(axis=1)


def dual(E: GoodIdeal, check: bool = True) -> DualResult:
    S = E.ambient
    gamma = S.gamma
    lo = tuple(g - c for g, c in zip(gamma, E.gammaE))
    hi = tuple(g - m for g, m in zip(gamma, E.mu))
    V = box_array(lo, hi)
    members = V[dual_members(E, V)]
    try:
        D = ideal_from_members(S, members, lo, hi)
    except NormalizationError as exc:
        raise DualError(f"dual not a good ideal: {exc}") from exc
    if check:
        report = validate(D)
        if not report.ok:
            raise DualError(f"dual not a good ideal: {report.violations[0].message}")
    if D.mu != lo or D.gammaE != hi:
        raise DualError(f"dual has min {D.mu} and conductor {D.gammaE}, expected {lo} and {hi}")
    return DualResult(D, gamma)


def canonical_values(S: GoodSemigroup) -> GoodIdeal:
    return dual(S.as_ideal()).dual


def is_symmetric(S: GoodSemigroup) -> bool:
    return canonical_values(S) == S.as_ideal()
