"""Irreducible elements, per-branch minimal generators and the E_j^i(ν) sets
whose maximal elements are irreducible absolute maximals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .core import GoodIdeal, GoodSemigroup, project_semigroup, projection
from .lattice import Point, leq, zero
from .maximals import classify_maximals


def _decompositions(v, E: GoodIdeal, nonzero_rest: bool = False) -> np.ndarray:
    """Nonzero a in S with v - a in E (and v - a nonzero when asked)."""
    S = E.ambient
    v = np.asarray(v, dtype=np.int64)
    hi = v - np.asarray(E.mu, dtype=np.int64)
    if np.any(hi < 0):
        return np.zeros((0, E.p), dtype=np.int64)
    A = S.members_in(zero(E.p), tuple(map(int, hi)))
    A = A[np.any(A != 0, axis=1)]
    if nonzero_rest:
        A = A[np.any(A != v, axis=1)]
    return A[E.contains_many(v - A)] if len(A) else A


def is_irreducible(v, E: GoodIdeal) -> bool:
    """v in E is irreducible when v = a + b (a in S, b in E) forces a = 0."""
    if not E.contains(tuple(v)):
        raise ValueError(f"{tuple(v)} is not in the ideal")
    return len(_decompositions(v, E)) == 0


def is_semigroup_irreducible(v, S: GoodSemigroup) -> bool:
    """v != 0 in S and not a sum of two nonzero elements of S."""
    if not S.contains(tuple(v)) or not any(v):
        return False
    return len(_decompositions(v, S.as_ideal(), nonzero_rest=True)) == 0


def irreducible_absolute_maximals(E: GoodIdeal) -> frozenset:
    return frozenset(a for a in classify_maximals(E).absolute if is_irreducible(a, E))


def semigroup_irreducible_absolute_maximals(S: GoodSemigroup) -> frozenset:
    """Nonzero absolute maximals of S that are not sums of two nonzero elements."""
    absolute = classify_maximals(S.as_ideal()).absolute
    return frozenset(a for a in absolute if is_semigroup_irreducible(a, S))


def minimal_generator_values(E: GoodIdeal, i: int) -> tuple:
    """Minimal generators of pr_i(E) as an ideal over the numerical semigroup pr_i(S)."""
    N = projection(E, [i])
    Sp = project_semigroup(E.ambient, [i])
    lo = N.mu[0]
    # past conductor(N) + conductor(pr_i S) every element decomposes
    hi = N.gammaE[0] + max(Sp.gamma[0], 1)
    members = [h for h in range(lo, hi + 1) if N.contains((h,))]
    svals = [s for s in range(1, hi - lo + 1) if Sp.contains((s,))]
    gens = tuple(h for h in members if not any(N.contains((h - s,)) for s in svals if h - s >= lo))
    # generating property on the window
    for n in members:
        assert any(n == h or (n - h > 0 and Sp.contains((n - h,))) for h in gens), n
    return gens


@dataclass(frozen=True)
class EjiSet:
    i: int
    h: int
    nu: Point
    elements: frozenset

    def maximal_elements(self) -> frozenset:
        pts = sorted(self.elements)
        out = []
        for a in pts:
            if not any(b != a and leq(a, b) for b in pts):
                out.append(a)
        return frozenset(out)

    def to_dict(self) -> dict:
        return {"branch": self.i, "h": self.h, "nu": list(self.nu),
                "elements": sorted(map(list, self.elements))}


def check_nu(E: GoodIdeal, nu) -> Point:
    nu = tuple(int(x) for x in nu)
    if len(nu) != E.p:
        raise ValueError(f"nu {nu} has the wrong dimension")
    # nu + N^p inside E  <=>  nu >= conductor
    if not (E.contains(nu) and leq(E.gammaE, nu)):
        raise ValueError(f"invalid nu {nu}: nu + N^p is not contained in the ideal")
    return nu


def eji_sets(E: GoodIdeal, nu) -> List[EjiSet]:
    nu = check_nu(E, nu)
    out = []
    for i in range(E.p):
        for h in minimal_generator_values(E, i):
            lo = tuple(h if j == i else E.mu[j] for j in range(E.p))
            hi = tuple(h if j == i else nu[j] for j in range(E.p))
            if not leq(lo, hi):
                pts = []
            else:
                pts = E.members_in(lo, hi)
            out.append(EjiSet(i, h, nu, frozenset(tuple(map(int, v)) for v in pts)))
    return out


def _characterized(s: EjiSet) -> frozenset:
    return frozenset(a for a in s.maximal_elements() if all(x != n for x, n in zip(a, s.nu)))


def irr_absmax_by_characterization(E: GoodIdeal, nu) -> frozenset:
    out = set()
    for s in eji_sets(E, nu):
        out |= _characterized(s)
    return frozenset(out)


def nu_independence_check(E: GoodIdeal, nu1, nu2) -> bool:
    return irr_absmax_by_characterization(E, nu1) == irr_absmax_by_characterization(E, nu2)


def eji_violations(E: GoodIdeal, nu) -> list:
    """Members of E_j^i(ν) that are reducible, or for which being an irreducible
    absolute maximal disagrees with the maximal-and-off-ν criterion."""
    direct = irreducible_absolute_maximals(E)
    bad = []
    for s in eji_sets(E, nu):
        chosen = _characterized(s)
        for a in s.elements:
            if not is_irreducible(a, E):
                bad.append({"kind": "reducible", "branch": s.i, "h": s.h, "point": list(a)})
            if (a in direct) != (a in chosen):
                bad.append({"kind": "criterion", "branch": s.i, "h": s.h, "point": list(a)})
    return bad


def coverage_report(E: GoodIdeal, nu=None) -> dict:
    """Irreducible absolute maximals the E_j^i(ν) criterion does not reach."""
    nu = tuple(E.gammaE) if nu is None else check_nu(E, nu)
    gens = [minimal_generator_values(E, i) for i in range(E.p)]
    direct = irreducible_absolute_maximals(E)
    found = irr_absmax_by_characterization(E, nu)
    missed = sorted(direct - found)
    return {
        "nu": list(nu),
        "generators": [list(g) for g in gens],
        "irreducible_absolute_maximals": sorted(map(list, direct)),
        "characterized": sorted(map(list, found)),
        "uncovered": [list(a) for a in missed],
        "research_flag": bool(missed),
    }
