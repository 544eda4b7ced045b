"""Good semigroups and good semigroup ideals in Z^p.

A set E is stored by its minimum ``mu``, its conductor ``gammaE`` and its
small elements ``E ∩ [mu, gammaE]``.  Any other point is decided by clamping:
``v ∈ E  <=>  v >= mu  and  inf(v, gammaE) ∈ small``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .lattice import (
    MAX_P,
    Box,
    DimensionError,
    Point,
    box_array,
    index_set,
    inf,
    leq,
    point,
    sup,
    zero,
)

# per-coordinate requirements for pattern queries, as sets of accepted code bits
EQ = 1
GT = 2
GE = 3

_CHUNK = 1 << 22


class GenerationError(RuntimeError):
    pass


class NormalizationError(ValueError):
    pass


def _points(items: Iterable[Sequence[int]], p: int) -> frozenset:
    out = set()
    for v in items:
        v = point(v)
        if len(v) != p:
            raise DimensionError(f"point {v} is not of dimension {p}")
        out.add(v)
    return frozenset(out)


def _sorted_array(points: Iterable[Point], p: int) -> np.ndarray:
    pts = sorted(points)
    if not pts:
        return np.zeros((0, p), dtype=np.int64)
    return np.array(pts, dtype=np.int64).reshape(len(pts), p)


@lru_cache(maxsize=None)
def _weights(p: int) -> np.ndarray:
    return 4 ** np.arange(p, dtype=np.int64)


def _digits(codes: np.ndarray, p: int) -> np.ndarray:
    return (codes[:, None] // _weights(p)[None, :]) % 4


def pattern_exists(U, top, W, patterns, lift=True) -> np.ndarray:
    """For each query point w decide which coordinate patterns are realised.

    ``U`` holds the stored points of a set whose coordinates equal to ``top``
    stand for every value ``>= top`` (when ``lift`` is set).  A pattern is a
    length-p sequence of EQ/GT/GE and asks for a member v with ``v_j = w_j``,
    ``v_j > w_j`` or ``v_j >= w_j`` respectively.  Returns an
    ``(len(W), len(patterns))`` boolean array.

    Each stored point is reduced to a base-4 code (per coordinate: can it be
    made equal to w_j, can it be made larger); a pattern then only has to be
    tested against the distinct codes present for a given w.
    """
    U = np.asarray(U, dtype=np.int64)
    W = np.asarray(W, dtype=np.int64)
    reqs = np.asarray(patterns, dtype=np.int64)
    n_w, n_p = len(W), len(reqs)
    out = np.zeros((n_w, n_p), dtype=bool)
    if n_w == 0 or n_p == 0 or len(U) == 0:
        return out
    p = U.shape[1]
    top = np.asarray(top, dtype=np.int64)
    at_top = (U >= top[None, :]) if lift else np.zeros_like(U, dtype=bool)
    weights = _weights(p)
    step = max(1, _CHUNK // max(1, len(U) * p))
    for start in range(0, n_w, step):
        Wc = W[start:start + step]
        Ub = U[None, :, :]
        Wb = Wc[:, None, :]
        eq = np.where(at_top[None], Wb >= top[None, None, :], Ub == Wb)
        gt = at_top[None] | (Ub > Wb)
        codes = ((eq.astype(np.int64) + 2 * gt.astype(np.int64)) * weights).sum(axis=2)
        uniq, inv = np.unique(codes, return_inverse=True)
        inv = inv.reshape(codes.shape)
        present = np.zeros((len(Wc), len(uniq)), dtype=bool)
        present[np.arange(len(Wc))[:, None], inv] = True
        digits = _digits(uniq, p)
        accept = np.all((digits[:, None, :] & reqs[None, :, :]) != 0, axis=2)
        out[start:start + step] = present @ accept
    return out


@lru_cache(maxsize=None)
def delta_patterns(p: int) -> np.ndarray:
    """Row m is the Δ_J pattern for the index set with bitmask m."""
    rows = []
    for m in range(1 << p):
        rows.append([EQ if m >> j & 1 else GT for j in range(p)])
    return np.array(rows, dtype=np.int64)


class _Dense:
    """Mixin: dense membership table over the box [lo, top] with clamping."""

    def _dense(self, lo, top, pts):
        lo = np.asarray(lo, dtype=np.int64)
        top = np.asarray(top, dtype=np.int64)
        table = np.zeros(tuple(top - lo + 1), dtype=bool)
        if len(pts):
            inside = np.all((pts >= lo) & (pts <= top), axis=1)
            idx = (pts[inside] - lo).T
            table[tuple(idx)] = True
        return lo, top, table

    def _lookup(self, V) -> np.ndarray:
        lo, top, table = self._table
        V = np.asarray(V, dtype=np.int64)
        if V.ndim == 1:
            V = V[None, :]
        ok = np.all(V >= lo, axis=1)
        C = np.minimum(np.maximum(V, lo), top) - lo
        return ok & table[tuple(C.T)]


@dataclass(frozen=True)
class GoodSemigroup(_Dense):
    """An ambient value semigroup, given by its conductor and small elements."""

    gamma: Point
    small: frozenset = field(compare=True)

    def __post_init__(self):
        gamma = point(self.gamma)
        if not 1 <= len(gamma) <= MAX_P:
            raise DimensionError(f"p must be in 1..{MAX_P}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "small", _points(self.small, len(gamma)))

    @property
    def p(self) -> int:
        return len(self.gamma)

    @cached_property
    def small_array(self) -> np.ndarray:
        return _sorted_array(self.small, self.p)

    @cached_property
    def _table(self):
        return self._dense(zero(self.p), self.gamma, self.small_array)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.p:
            raise DimensionError(f"point {tuple(v)} is not of dimension {self.p}")
        return all(x >= 0 for x in v) and inf(tuple(v), self.gamma) in self.small

    def contains_many(self, V) -> np.ndarray:
        return self._lookup(V)

    def as_ideal(self) -> "GoodIdeal":
        return GoodIdeal(self, zero(self.p), self.gamma, self.small)

    def members_in(self, lo, hi) -> np.ndarray:
        pts = box_array(lo, hi)
        return pts[self.contains_many(pts)]


@dataclass(frozen=True)
class GoodIdeal(_Dense):
    """A good semigroup ideal over ``ambient``."""

    ambient: GoodSemigroup
    mu: Point
    gammaE: Point
    small: frozenset

    def __post_init__(self):
        mu, g = point(self.mu), point(self.gammaE)
        p = self.ambient.p
        if len(mu) != p or len(g) != p:
            raise DimensionError(f"mu/gammaE must have dimension {p}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "gammaE", g)
        object.__setattr__(self, "small", _points(self.small, p))

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def box(self) -> Box:
        return Box(self.mu, sup(self.mu, self.gammaE))

    @cached_property
    def small_array(self) -> np.ndarray:
        return _sorted_array(self.small, self.p)

    @cached_property
    def _table(self):
        return self._dense(self.mu, sup(self.mu, self.gammaE), self.small_array)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.p:
            raise DimensionError(f"point {tuple(v)} is not of dimension {self.p}")
        return leq(self.mu, tuple(v)) and inf(tuple(v), self.gammaE) in self.small

    def contains_many(self, V) -> np.ndarray:
        return self._lookup(V)

    def members_in(self, lo, hi) -> np.ndarray:
        pts = box_array(lo, hi)
        return pts[self.contains_many(pts)]

    def pattern_exists(self, W, patterns, lift=True) -> np.ndarray:
        return pattern_exists(self.small_array, self.gammaE, W, patterns, lift=lift)

    def delta_profile(self, W) -> np.ndarray:
        """``out[k, m]`` is True iff Δ_J(W[k], E) is nonempty, J the set with bitmask m."""
        W = np.asarray(W, dtype=np.int64).reshape(-1, self.p)
        return self.pattern_exists(W, delta_patterns(self.p))


def semigroup_as_ideal(S: GoodSemigroup) -> GoodIdeal:
    return S.as_ideal()


# -- validation ---------------------------------------------------------------


@dataclass
class Violation:
    axiom: str
    message: str
    witness: list

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "message": self.message,
                "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness]}


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, message, *witness):
        self.violations.append(Violation(axiom, message, list(witness)))

    def axioms(self) -> set:
        return {v.axiom for v in self.violations}

    def to_dict(self) -> dict:
        return {"valid": self.ok, "violations": [v.to_dict() for v in self.violations]}


_MAX_WITNESSES = 5


def _inf_closure_violations(U, member, report, label):
    n = len(U)
    found = 0
    step = max(1, _CHUNK // max(1, n * U.shape[1] if n else 1))
    for start in range(0, n, step):
        A = U[start:start + step]
        M = np.minimum(A[:, None, :], U[None, :, :]).reshape(-1, U.shape[1])
        bad = ~member(M)
        if bad.any():
            for k in np.flatnonzero(bad)[:_MAX_WITNESSES - found]:
                a, b = divmod(int(k), n)
                report.add(f"{label}inf-closure", "inf of two members is not a member",
                           tuple(map(int, A[a])), tuple(map(int, U[b])),
                           tuple(map(int, M[k])))
                found += 1
            if found >= _MAX_WITNESSES:
                return


def delta_witness(E, alpha, J, box: Optional[Box] = None) -> Optional[Point]:
    """Search a box for v ∈ E with v ∈ Δ_J(alpha, Z^p); None when there is none.

    The default box [alpha, sup(gammaE, alpha + 1)] suffices: a witness v can be
    replaced by inf(v, sup(gammaE, alpha + 1)), which stays in E and in Δ_J.
    """
    p = E.p
    J = index_set(J, p)
    if not J:
        raise ValueError("empty index set")
    alpha = tuple(alpha)
    if box is None:
        box = Box(alpha, sup(E.gammaE, tuple(a + 1 for a in alpha)))
    pts = box_array(box.lo, box.hi)
    if not len(pts):
        return None
    a = np.asarray(alpha, dtype=np.int64)
    jm = np.zeros(p, dtype=bool)
    jm[list(J)] = True
    ok = np.all(np.where(jm, pts == a, pts > a), axis=1)
    pts = pts[ok]
    if not len(pts):
        return None
    hit = pts[E.contains_many(pts)]
    return tuple(map(int, hit[0])) if len(hit) else None


def e2_witness(E, alpha: Point, beta: Point, i: int, box: Optional[Box] = None) -> Optional[Point]:
    """Search for the point promised by the coordinate-raising axiom for (alpha, beta, i)."""
    lo = inf(alpha, beta)
    if box is None:
        hi = sup(E.gammaE, sup(tuple(a + 1 for a in alpha), tuple(b + 1 for b in beta)))
        box = Box(lo, sup(lo, hi))
    pts = box_array(box.lo, box.hi)
    a = np.asarray(alpha, dtype=np.int64)
    b = np.asarray(beta, dtype=np.int64)
    m = np.minimum(a, b)
    differ = a != b
    ok = np.all(pts >= m, axis=1) & (pts[:, i] > a[i])
    ok &= np.all(np.where(differ, pts == m, True), axis=1)
    pts = pts[ok]
    hit = pts[E.contains_many(pts)] if len(pts) else pts
    return tuple(map(int, hit[0])) if len(hit) else None


def e2_violations_literal(E, box_scale: int = 1) -> list:
    """Check the coordinate-raising axiom pair by pair over the small elements.

    Slow reference path.  With ``box_scale > 1`` the witness box is enlarged
    by that factor, which is how the bounded search is cross-checked.
    """
    out = []
    pts = sorted(E.small)
    for a_idx, alpha in enumerate(pts):
        for beta in pts[a_idx + 1:]:
            for i in range(E.p):
                if alpha[i] != beta[i]:
                    continue
                box = None
                if box_scale != 1:
                    lo = inf(alpha, beta)
                    hi = sup(E.gammaE, sup(tuple(a + 1 for a in alpha), tuple(b + 1 for b in beta)))
                    hi = tuple(l + box_scale * (h - l) for l, h in zip(lo, hi))
                    box = Box(lo, hi)
                if e2_witness(E, alpha, beta, i, box) is None:
                    out.append((alpha, beta, i))
    return out


def _e2_violations(E: GoodIdeal, report: ValidationReport, label: str) -> None:
    # Pairs reduce to comparable ones: with w = inf(a, b), witnesses for
    # (w, a, i) and (w, b, i) meet (by inf) in a witness for (a, b, i).
    p = E.p
    U = E.small_array
    if p < 2 or len(U) < 2:
        return
    prof = pattern_exists(U, E.gammaE, U, delta_patterns(p), lift=False)
    pats, keys = [], []
    for m in range(1, (1 << p) - 1):
        for i in range(p):
            if m >> i & 1:
                pats.append([GT if j == i else (GE if m >> j & 1 else EQ) for j in range(p)])
                keys.append((m, i))
    wit = E.pattern_exists(U, pats)
    found = 0
    for k, (m, i) in enumerate(keys):
        bad = prof[:, m] & ~wit[:, k]
        for r in np.flatnonzero(bad):
            w = tuple(map(int, U[r]))
            J = [j for j in range(p) if m >> j & 1]
            beta = next(tuple(map(int, u)) for u in U
                        if all((u[j] == w[j]) == (j in J) and u[j] >= w[j] for j in range(p)))
            report.add(f"{label}E2", f"no point raising coordinate {i} for this pair",
                       w, beta, i)
            found += 1
            if found >= _MAX_WITNESSES:
                return


def _structure(E: GoodIdeal, report: ValidationReport, label: str) -> bool:
    U = E.small_array
    if not len(U):
        report.add(f"{label}structure", "no small elements")
        return False
    fine = True
    if E.mu not in E.small:
        report.add(f"{label}min", "minimum is not a small element", E.mu)
        fine = False
    if E.gammaE not in E.small:
        report.add(f"{label}conductor", "conductor is not a small element", E.gammaE)
        fine = False
    true_min = tuple(int(x) for x in U.min(axis=0))
    if true_min != E.mu:
        report.add(f"{label}min", "stored minimum differs from the minimum of the small elements",
                   E.mu, true_min)
        fine = False
    outside = [tuple(map(int, u)) for u in U
               if not (leq(E.mu, tuple(u)) and leq(tuple(u), E.gammaE))]
    if outside:
        report.add(f"{label}structure", "small elements outside [min, conductor]", *outside[:_MAX_WITNESSES])
        fine = False
    return fine


def validate_semigroup(S: GoodSemigroup, report: Optional[ValidationReport] = None,
                       label: str = "ambient ") -> ValidationReport:
    report = report if report is not None else ValidationReport()
    E = S.as_ideal()
    p = S.p
    if zero(p) not in S.small:
        report.add(f"{label}zero", "0 is not an element", zero(p))
    neg = [v for v in S.small if any(x < 0 for x in v)]
    if neg:
        report.add(f"{label}nonnegative", "element with a negative coordinate", *sorted(neg)[:_MAX_WITNESSES])
    if not _structure(E, report, label):
        return report
    U = S.small_array
    _inf_closure_violations(U, S.contains_many, report, label)
    sums = (U[:, None, :] + U[None, :, :]).reshape(-1, p)
    bad = ~S.contains_many(sums)
    for k in np.flatnonzero(bad)[:_MAX_WITNESSES]:
        a, b = divmod(int(k), len(U))
        report.add(f"{label}addition", "sum of two elements is not an element",
                   tuple(map(int, U[a])), tuple(map(int, U[b])))
    _e2_violations(E, report, label)
    for i in range(p):
        below = tuple(g - (1 if j == i else 0) for j, g in enumerate(S.gamma))
        if below in S.small:
            report.add(f"{label}conductor-minimality", "conductor minus a unit vector is an element", below)
    return report


def validate(E: GoodIdeal) -> ValidationReport:
    """Check every good-ideal axiom, collecting witnesses instead of raising."""
    report = ValidationReport()
    validate_semigroup(E.ambient, report)
    if not _structure(E, report, ""):
        return report
    p = E.p
    U = E.small_array
    _inf_closure_violations(U, E.contains_many, report, "")
    _e2_violations(E, report, "")
    # S-action: s beyond sup(gamma, gammaE - mu) acts like its clamp
    S = E.ambient
    reach = sup(S.gamma, tuple(g - m for g, m in zip(E.gammaE, E.mu)))
    reach = sup(reach, zero(p))
    svals = S.members_in(zero(p), reach)
    found = 0
    step = max(1, _CHUNK // max(1, len(U) * p))
    for start in range(0, len(svals), step):
        blk = svals[start:start + step]
        sums = (blk[:, None, :] + U[None, :, :]).reshape(-1, p)
        bad = ~E.contains_many(sums)
        for k in np.flatnonzero(bad)[:_MAX_WITNESSES - found]:
            a, b = divmod(int(k), len(U))
            report.add("S-action", "semigroup element plus ideal element is not in the ideal",
                       tuple(map(int, blk[a])), tuple(map(int, U[b])))
            found += 1
        if found >= _MAX_WITNESSES:
            break
    for i in range(p):
        below = tuple(g - (1 if j == i else 0) for j, g in enumerate(E.gammaE))
        if below in E.small:
            report.add("conductor-minimality", "conductor minus a unit vector is in the ideal", below)
    return report


# -- normalisation ------------------------------------------------------------


def normalize(members, lo: Point, hi: Point):
    """Canonical (min, conductor, small) of a set known on the box [lo, hi].

    ``members`` is an (n, p) array or iterable of points of the box; a point
    beyond ``hi`` is taken to behave like its clamp to ``hi``.
    """
    p = len(lo)
    lo_a = np.asarray(lo, dtype=np.int64)
    hi_a = np.asarray(hi, dtype=np.int64)
    pts = np.asarray(list(members) if not isinstance(members, np.ndarray) else members,
                     dtype=np.int64).reshape(-1, p)
    if not len(pts):
        raise NormalizationError("empty set")
    if np.any(pts < lo_a) or np.any(pts > hi_a):
        raise NormalizationError("members outside the window")
    table = np.zeros(tuple(hi_a - lo_a + 1), dtype=bool)
    table[tuple((pts - lo_a).T)] = True
    if not table[tuple(hi_a - lo_a)]:
        raise NormalizationError(f"window top {tuple(hi)} is not a member; no upper orthant")
    mu = pts.min(axis=0)
    c = hi_a - lo_a
    changed = True
    while changed:
        changed = False
        for i in range(p):
            while c[i] > mu[i] - lo_a[i]:
                trial = c.copy()
                trial[i] -= 1
                if table[tuple(slice(t, None) for t in trial)].all():
                    c = trial
                    changed = True
                else:
                    break
    cond = c + lo_a
    # every window point must agree with its clamp to the conductor
    allpts = box_array(lo, hi)
    clamped = np.minimum(allpts, cond)
    if not np.array_equal(table[tuple((allpts - lo_a).T)], table[tuple((clamped - lo_a).T)]):
        raise NormalizationError("set is not determined by its conductor clamp on the window")
    inside = np.all(pts <= cond, axis=1)
    small = frozenset(tuple(map(int, v)) for v in pts[inside])
    return tuple(map(int, mu)), tuple(map(int, cond)), small


def ideal_from_members(ambient: GoodSemigroup, members, lo: Point, hi: Point) -> GoodIdeal:
    mu, cond, small = normalize(members, lo, hi)
    return GoodIdeal(ambient, mu, cond, small)


def semigroup_from_members(members, hi: Point) -> GoodSemigroup:
    mu, cond, small = normalize(members, zero(len(hi)), hi)
    return GoodSemigroup(cond, small)


def full_lattice(p: int) -> GoodSemigroup:
    """N^p, conductor 0."""
    return GoodSemigroup(zero(p), {zero(p)})


def orthant_ideal(S: GoodSemigroup, c: Point) -> GoodIdeal:
    """The ideal c + N^p."""
    return GoodIdeal(S, c, c, {tuple(c)})


# -- projections --------------------------------------------------------------


def _proj_index(J, p) -> tuple:
    idx = index_set(J, p)
    if not idx:
        raise ValueError("empty index set")
    return tuple(sorted(idx))


def project_semigroup(S: GoodSemigroup, J) -> GoodSemigroup:
    idx = _proj_index(J, S.p)
    pts = S.small_array[:, idx]
    return semigroup_from_members(np.unique(pts, axis=0), tuple(S.gamma[j] for j in idx))


def projection(E: GoodIdeal, J) -> GoodIdeal:
    """pr_J(E) as a good ideal over pr_J(ambient).

    Lifting a projected point only needs the free coordinates in
    [mu_i, gammaE_i], so projecting the small elements is the whole search.
    """
    idx = _proj_index(J, E.p)
    S_J = project_semigroup(E.ambient, idx)
    pts = np.unique(E.small_array[:, idx], axis=0)
    lo = tuple(E.mu[j] for j in idx)
    hi = tuple(max(E.mu[j], E.gammaE[j]) for j in idx)
    return ideal_from_members(S_J, pts, lo, hi)


def equals(E: GoodIdeal, F: GoodIdeal) -> bool:
    if E.ambient != F.ambient:
        raise ValueError("ideals live over different ambient semigroups")
    return E.mu == F.mu and E.gammaE == F.gammaE and E.small == F.small


# -- random instances ---------------------------------------------------------


def _inf_close(table: np.ndarray) -> bool:
    changed = False
    while True:
        pts = np.argwhere(table)
        M = np.minimum(pts[:, None, :], pts[None, :, :]).reshape(-1, pts.shape[1])
        new = ~table[tuple(M.T)]
        if not new.any():
            return changed
        table[tuple(M[new].T)] = True
        changed = True


def _add_close(table: np.ndarray, left: np.ndarray, top: np.ndarray) -> bool:
    """Close the table under adding the points of ``left`` (clamped to top)."""
    changed = False
    while True:
        pts = np.argwhere(table)
        L = left if left is not None else pts
        M = np.minimum(L[:, None, :] + pts[None, :, :], top).reshape(-1, pts.shape[1])
        new = ~table[tuple(M.T)]
        if not new.any():
            return changed
        table[tuple(M[new].T)] = True
        changed = True


def _e2_repair(table: np.ndarray, top: np.ndarray, rng: random.Random) -> bool:
    p = table.ndim
    pts = np.argwhere(table)
    prof = pattern_exists(pts, top, pts, delta_patterns(p))
    changed = False
    for m in range(1, (1 << p) - 1):
        for i in range(p):
            if not m >> i & 1:
                continue
            pat = [[GT if j == i else (GE if m >> j & 1 else EQ) for j in range(p)]]
            need = np.flatnonzero(prof[:, m])
            if not len(need):
                continue
            ok = pattern_exists(np.argwhere(table), top, pts[need], pat)[:, 0]
            for r in need[~ok]:
                eta = pts[r].copy()
                eta[i] += 1 + (rng.random() < 0.25)
                eta = np.minimum(eta, top)
                if not table[tuple(eta)]:
                    table[tuple(eta)] = True
                    changed = True
    return changed


def _close_semigroup(table, top, rng, limit=200):
    for _ in range(limit):
        changed = _inf_close(table)
        changed |= _add_close(table, None, top)
        changed |= _e2_repair(table, top, rng)
        if not changed:
            return
    raise GenerationError("generation failed, retry with new seed")


def _close_ideal(table, svals, top, rng, limit=200):
    for _ in range(limit):
        changed = _inf_close(table)
        changed |= _add_close(table, svals, top)
        changed |= _e2_repair(table, top, rng)
        if not changed:
            return
    raise GenerationError("generation failed, retry with new seed")


def random_good_semigroup(rng: random.Random, p: int, bound: int) -> GoodSemigroup:
    top = np.full(p, bound, dtype=np.int64)
    table = np.zeros((bound + 1,) * p, dtype=bool)
    table[(0,) * p] = True
    table[tuple(top)] = True
    for _ in range(rng.randint(1, 3)):
        table[tuple(rng.randint(1, bound) for _ in range(p))] = True
    _close_semigroup(table, top, rng)
    return semigroup_from_members(np.argwhere(table), tuple(top))


def random_good_ideal(seed: int, p: int, bound: int) -> GoodIdeal:
    """A random valid good ideal over a random local good semigroup, both
    with conductor coordinates at most ``bound``; deterministic per seed."""
    if not 2 <= p <= 4:
        raise ValueError("p must be in 2..4")
    if not 2 <= bound <= 8:
        raise ValueError("bound must be in 2..8")
    rng = random.Random(f"{seed}:{p}:{bound}")
    S = random_good_semigroup(rng, p, bound)
    top = np.full(p, bound, dtype=np.int64)
    table = np.zeros((bound + 1,) * p, dtype=bool)
    table[tuple(top)] = True
    for _ in range(rng.randint(1, 3)):
        table[tuple(rng.randint(0, bound) for _ in range(p))] = True
    svals = S.members_in(zero(p), tuple(top))
    _close_ideal(table, svals, top, rng)
    try:
        E = ideal_from_members(S, np.argwhere(table), zero(p), tuple(top))
    except NormalizationError as exc:
        raise GenerationError("generation failed, retry with new seed") from exc
    if not validate(E).ok:
        raise GenerationError("generation failed, retry with new seed")
    return E
