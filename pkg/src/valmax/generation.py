"""Recovering a good ideal from its codimension-one projections and its
relative maximals, directly or through the reflected set F'."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from .core import GoodIdeal, GoodSemigroup, NormalizationError, ideal_from_members, projection, validate
from .duality import dual
from .lattice import Box, Point, box_array, leq, sup
from .maximals import classify_maximals
from .stdbasis import irreducible_absolute_maximals, semigroup_irreducible_absolute_maximals


class ReconstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenerationInput:
    projections: Dict[tuple, GoodIdeal]
    relmax: frozenset

    @property
    def p(self) -> int:
        return len(next(iter(self.projections))) + 1

    def __post_init__(self):
        keys = list(self.projections)
        if not keys:
            raise ValueError("no projections")
        p = len(keys[0]) + 1
        expected = {tuple(j for j in range(p) if j != k) for k in range(p)}
        if set(keys) != expected:
            raise ValueError(f"need exactly the {p} projections omitting one coordinate each")


@dataclass(frozen=True)
class FPrimeSet:
    F: frozenset
    Fprime: frozenset
    nu_dual: Point


def generation_input(E: GoodIdeal) -> GenerationInput:
    if E.p < 2:
        raise ValueError("needs p >= 2")
    projs = {}
    for k in range(E.p):
        J = tuple(j for j in range(E.p) if j != k)
        projs[J] = projection(E, J)
    return GenerationInput(projs, classify_maximals(E).relative)


def projections_pass(V, G: GenerationInput) -> np.ndarray:
    V = np.asarray(V, dtype=np.int64).reshape(-1, G.p)
    ok = np.ones(len(V), dtype=bool)
    for J, P in G.projections.items():
        ok &= P.contains_many(V[:, list(J)])
    return ok


def in_some_delta(V, points) -> np.ndarray:
    """v ∈ Δ(w, Z^p) for some w in points."""
    V = np.asarray(V, dtype=np.int64)
    hit = np.zeros(len(V), dtype=bool)
    for w in points:
        w = np.asarray(w, dtype=np.int64)
        eq = V == w
        hit |= (eq.sum(axis=1) == 1) & np.all(eq | (V > w), axis=1)
    return hit


def _tri(V, G, excluded_by) -> list:
    pre = projections_pass(V, G)
    excl = in_some_delta(V, excluded_by)
    return [None if not p else not x for p, x in zip(pre, excl)]


def membership_by_generation(v, G: GenerationInput) -> Optional[bool]:
    """Membership of v decided from projections and relative maximals.

    Returns None when some codimension-one projection of v misses the
    projected ideal: the criterion says nothing there.
    """
    return _tri([tuple(v)], G, G.relmax)[0]


def default_window(G: GenerationInput) -> Box:
    p = G.p
    lo, hi = [None] * p, [None] * p
    for J, P in G.projections.items():
        for pos, j in enumerate(J):
            lo[j] = P.mu[pos] if lo[j] is None else min(lo[j], P.mu[pos])
            hi[j] = P.gammaE[pos] if hi[j] is None else max(hi[j], P.gammaE[pos])
    # above every projection conductor and every relative maximal the
    # criterion admits everything, so one more layer pins the conductor
    for a in G.relmax:
        hi = [max(h, x + 1) for h, x in zip(hi, a)]
    hi = [max(h, l) + 1 for h, l in zip(hi, lo)]
    return Box(tuple(lo), tuple(hi))


def _assemble(ambient, V, member, window) -> GoodIdeal:
    try:
        E = ideal_from_members(ambient, V[member], window.lo, window.hi)
    except NormalizationError as exc:
        raise ReconstructionError(f"reconstruction failed: {exc}") from exc
    report = validate(E)
    if not report.ok:
        v = report.violations[0]
        raise ReconstructionError(f"reconstruction failed: {v.axiom}: {v.message} {v.witness}")
    return E


def reconstruct(G: GenerationInput, ambient: GoodSemigroup, window: Optional[Box] = None) -> GoodIdeal:
    """Rebuild E on a window, treating an unmet projection condition as non-membership."""
    window = window or default_window(G)
    V = box_array(window.lo, window.hi)
    member = projections_pass(V, G) & ~in_some_delta(V, G.relmax)
    return _assemble(ambient, V, member, window)


def build_fprime(E: GoodIdeal, D: Optional[GoodIdeal] = None) -> FPrimeSet:
    """F = sums of irreducible absolute maximals of S onto those of the dual,
    kept below nu_dual - 1; F' is its reflection through γ - 1."""
    if D is None:
        D = dual(E).dual
    gens = sorted(semigroup_irreducible_absolute_maximals(E.ambient))
    betas = irreducible_absolute_maximals(D)
    nu = D.gammaE
    cap = tuple(x - 1 for x in nu)
    F = set()
    frontier = [b for b in betas if leq(b, cap)]
    while frontier:
        nxt = []
        for f in frontier:
            if f in F:
                continue
            F.add(f)
            for g in gens:
                s = tuple(a + b for a, b in zip(f, g))
                if leq(s, cap) and s not in F:
                    nxt.append(s)
        frontier = nxt
    gamma = E.ambient.gamma
    Fp = frozenset(tuple(c - x - 1 for c, x in zip(gamma, f)) for f in F)
    return FPrimeSet(frozenset(F), Fp, nu)


def membership_by_fprime(v, FP: FPrimeSet, G: GenerationInput) -> Optional[bool]:
    return _tri([tuple(v)], G, FP.Fprime)[0]


def generation_disagreements(E: GoodIdeal, window: Optional[Box] = None, D=None) -> dict:
    """Compare both criteria against direct membership over a window."""
    G = generation_input(E)
    FP = build_fprime(E, D)
    window = window or Box(E.mu, tuple(x + 1 for x in sup(E.mu, E.gammaE)))
    V = box_array(window.lo, window.hi)
    truth = E.contains_many(V)
    pre = projections_pass(V, G)
    by_rel = ~in_some_delta(V, G.relmax)
    by_fp = ~in_some_delta(V, FP.Fprime)
    rel_bad = V[pre & (by_rel != truth)]
    fp_bad = V[pre & (by_fp != truth)]
    # genuine members always pass the projection condition
    lost = V[truth & ~pre]
    return {
        "window": [list(window.lo), list(window.hi)],
        "checked": int(pre.sum()),
        "precondition_unmet": int((~pre).sum()),
        "relmax_disagreements": rel_bad.tolist(),
        "fprime_disagreements": fp_bad.tolist(),
        "members_failing_projection": lost.tolist(),
        "relmax_in_fprime": G.relmax <= FP.Fprime,
    }


def decomposition_violations(E: GoodIdeal) -> list:
    """Absolute maximals v = a + b (a in S, b in E) whose parts are not absolute maximals."""
    S = E.ambient
    absE = classify_maximals(E).absolute
    absS = classify_maximals(S.as_ideal()).absolute
    bad = []
    for v in absE:
        hi = tuple(x - m for x, m in zip(v, E.mu))
        if any(h < 0 for h in hi):
            continue
        A = S.members_in((0,) * E.p, hi)
        A = A[E.contains_many(np.asarray(v) - A)]
        for a in A:
            a = tuple(map(int, a))
            b = tuple(x - y for x, y in zip(v, a))
            if a not in absS or b not in absE:
                bad.append({"v": list(v), "a": list(a), "b": list(b)})
    return bad
