"""Acceptance criteria 1-8, one printed PASS/FAIL line each."""

import time

import pytest

from valmax.checks import default_corpus, nu_choices
from valmax.core import delta_witness, e2_violations_literal, equals, random_good_ideal, validate
from valmax.curveval import CurveSpec, ingest_curve
from valmax.duality import canonical_values, dual, is_symmetric
from valmax.generation import generation_disagreements, generation_input, reconstruct
from valmax.lattice import Box, from_mask, sup
from valmax.maximals import classify_maximals, relmax_from_dual, symmetry_check
from valmax.stdbasis import (eji_sets, eji_violations, irr_absmax_by_characterization,
                             irreducible_absolute_maximals, is_irreducible, nu_independence_check)

from conftest import box_points, node_semigroup, three_axes


@pytest.fixture(scope="module")
def corpus():
    return [(key, random_good_ideal(*key)) for key in default_corpus()]


@pytest.fixture(scope="module")
def duals(corpus):
    return {key: dual(E).dual for key, E in corpus}


def report(capsys, n, name, ok, detail, elapsed, budget):
    in_time = elapsed <= budget
    verdict = "PASS" if ok and in_time else "FAIL"
    with capsys.disabled():
        print(f"\nCRITERION {n} [{name}]: {verdict} ({detail}; {elapsed:.1f}s of {budget}s)")
    assert ok, detail
    assert in_time, f"took {elapsed:.1f}s, budget {budget}s"


def test_criterion_1_biduality(capsys, corpus):
    t = time.perf_counter()
    bad = [key for key, E in corpus if not equals(dual(dual(E).dual).dual, E)]
    elapsed = time.perf_counter() - t
    ps = sorted({key[1] for key, _ in corpus})
    report(capsys, 1, "biduality", len(corpus) >= 200 and not bad,
           f"{len(corpus)} instances, p in {ps}, failures {bad[:5]}", elapsed, 120)


def test_criterion_2_maximals_symmetry(capsys, corpus, duals):
    t = time.perf_counter()
    bad = []
    nonempty = 0
    for key, E in corpus:
        D = duals[key]
        direct = classify_maximals(E).relative
        nonempty += bool(direct)
        if not symmetry_check(E, D).ok or relmax_from_dual(E, D) != direct:
            bad.append(key)
    elapsed = time.perf_counter() - t
    report(capsys, 2, "symmetry of maximals", not bad,
           f"{len(corpus)} instances, {nonempty} with relative maximals, failures {bad[:5]}",
           elapsed, 180)


def test_criterion_3_generation(capsys, corpus):
    t = time.perf_counter()
    bad = []
    used = [(key, E) for key, E in corpus if key[1] in (2, 3)]
    for key, E in used:
        window = Box(E.mu, tuple(g + 1 for g in E.gammaE))
        try:
            R = reconstruct(generation_input(E), E.ambient, window)
            if not equals(R, E):
                bad.append(key)
        except Exception:
            bad.append(key)
    elapsed = time.perf_counter() - t
    report(capsys, 3, "reconstruction", not bad,
           f"{len(used)} instances with p in (2, 3), failures {bad[:5]}", elapsed, 180)


def test_criterion_4_fprime(capsys, corpus, duals):
    t = time.perf_counter()
    bad, checked = [], 0
    for key, E in corpus:
        rep = generation_disagreements(E, D=duals[key])
        checked += rep["checked"]
        if rep["fprime_disagreements"]:
            bad.append(key)
    elapsed = time.perf_counter() - t
    report(capsys, 4, "F' membership", not bad,
           f"{checked} window points checked, disagreeing instances {bad[:5]}", elapsed, 600)


def test_criterion_5_standard_bases(capsys, corpus):
    t = time.perf_counter()
    bad = []
    for key, E in corpus:
        nus = nu_choices(E)
        direct = irreducible_absolute_maximals(E)
        ok = not eji_violations(E, nus[0])
        ok &= all(is_irreducible(a, E) for s in eji_sets(E, nus[0]) for a in s.elements)
        ok &= all(irr_absmax_by_characterization(E, nu) <= direct for nu in nus)
        ok &= len(nus) >= 3 and all(nu_independence_check(E, nus[0], nu) for nu in nus[1:])
        if not ok:
            bad.append(key)
    elapsed = time.perf_counter() - t
    report(capsys, 5, "standard-basis suite", not bad,
           f"{len(corpus)} instances, failures {bad[:5]}", elapsed, 600)


def _lines(p, T):
    return CurveSpec.from_dict({"m": p, "T": T, "generators": ["1"],
                                "branches": [{f"x{i + 1}": [[1, 1, 1]]} for i in range(p)]})


def test_criterion_6_curves(capsys):
    t = time.perf_counter()
    checks = {}
    # expected conductors are (1,1) and (1,1,1), so T = 2*1 + 2
    node = ingest_curve(_lines(2, 4)).ambient
    checks["node small"] = node.small == {(0, 0), (1, 1)} and node.gamma == (1, 1)
    checks["node symmetric"] = is_symmetric(node)
    rep = classify_maximals(node.as_ideal())
    checks["node maximals"] = rep.maximals == rep.absolute == rep.relative == {(0, 0)}
    a3 = ingest_curve(_lines(3, 4)).ambient
    checks["A3"] = a3 == three_axes() and a3.gamma == (1, 1, 1)
    checks["A3 not symmetric"] = not is_symmetric(a3)
    K = canonical_values(a3)
    checks["K has (1,0,0)"] = K.contains((1, 0, 0))
    ra, rk = classify_maximals(a3.as_ideal()), classify_maximals(K)
    zero = (0, 0, 0)
    checks["0 in A3"] = zero in ra.absolute and zero not in ra.relative
    checks["0 in K"] = zero in rk.relative and zero not in rk.absolute
    checks["node semigroup"] = node == node_semigroup()
    elapsed = time.perf_counter() - t
    failed = [k for k, v in checks.items() if not v]
    report(capsys, 6, "curve examples", not failed,
           f"{len(checks)} exact checks, failed {failed}", elapsed, 30)


def test_criterion_7_p2_coincidence(capsys, corpus, duals):
    t = time.perf_counter()
    bad, n = [], 0
    for key, E in corpus:
        if key[1] != 2:
            continue
        for X in (E, duals[key]):
            n += 1
            r = classify_maximals(X)
            if not r.maximals == r.absolute == r.relative:
                bad.append(key)
    elapsed = time.perf_counter() - t
    report(capsys, 7, "p=2 coincidence", n > 0 and not bad,
           f"{n} ideals (corpus and duals), failures {bad[:5]}", elapsed, 120)


def _tiny_instances():
    out = [node_semigroup().as_ideal(), three_axes().as_ideal(), canonical_values(three_axes())]
    for p in (2, 3):
        for bound in (2, 3, 4):
            for seed in range(1, 9):
                out.append(random_good_ideal(seed, p, bound))
    return [E for E in out if max(E.gammaE) <= 4 and max(E.ambient.gamma) <= 4]


def test_criterion_8_bounded_search(capsys):
    t = time.perf_counter()
    bad, queries = [], 0
    tiny = _tiny_instances()
    for n, E in enumerate(tiny):
        p = E.p
        lo = tuple(m - 1 for m in E.mu)
        hi = tuple(g + 1 for g in E.gammaE)
        W = list(box_points(lo, hi))
        prof = E.delta_profile(W)
        for k, alpha in enumerate(W):
            top = sup(E.gammaE, tuple(a + 1 for a in alpha))
            big = Box(alpha, tuple(a + 2 * (h - a) for a, h in zip(alpha, top)))
            for m in range(1, 1 << p):
                J = from_mask(m, p)
                queries += 1
                bounded = delta_witness(E, alpha, J) is not None
                wide = delta_witness(E, alpha, J, big) is not None
                if not bounded == wide == bool(prof[k, m]):
                    bad.append((n, alpha, sorted(J)))
        if e2_violations_literal(E) != e2_violations_literal(E, box_scale=2):
            bad.append((n, "E2"))
        if not validate(E).ok:
            bad.append((n, "invalid"))
    elapsed = time.perf_counter() - t
    report(capsys, 8, "bounded search soundness", not bad,
           f"{len(tiny)} tiny instances, {queries} Δ_J queries, mismatches {bad[:5]}", elapsed, 300)
