import pytest

from valmax.core import orthant_ideal, random_good_ideal, full_lattice
from valmax.duality import dual
from valmax.lattice import from_mask, in_delta_J
from valmax.maximals import (absolute_maximals, classify_maximals, delta_empty,
                             is_relative_maximal_by_criterion, relative_maximals,
                             relmax_from_dual, symmetry_check)

from conftest import SMALL_CORPUS, members


def brute_classify(E):
    """Maximals straight from the definitions, by enumeration."""
    p = E.p
    top = tuple(g + 2 for g in E.gammaE)
    pts = members(E, E.mu, top)

    def empty(a, J):
        return not any(in_delta_J(v, a, J) for v in pts)

    mx, ab, rel = set(), set(), set()
    for a in members(E, E.mu, E.gammaE):
        if p < 2 or not all(empty(a, [i]) for i in range(p)):
            continue
        mx.add(a)
        proper = [from_mask(m, p) for m in range(1, (1 << p) - 1)]
        if all(empty(a, J) for J in proper):
            ab.add(a)
        if all(not empty(a, J) for J in proper if len(J) >= 2):
            rel.add(a)
    return mx, ab, rel


def test_delta_empty_examples(node, k_a3):
    assert delta_empty(node.as_ideal(), (0, 0), [0])
    assert not delta_empty(k_a3, (0, 0, 0), [0, 1])
    E = random_good_ideal(4, 3, 5)
    assert not delta_empty(E, E.gammaE, [0])


def test_node_maximals(node):
    rep = classify_maximals(node.as_ideal())
    assert rep.maximals == rep.absolute == rep.relative == {(0, 0)}


def test_three_axes_maximals(a3, k_a3):
    rep = classify_maximals(a3.as_ideal())
    assert rep.maximals == {(0, 0, 0)} and rep.absolute == {(0, 0, 0)} and not rep.relative
    rep = classify_maximals(k_a3)
    assert (0, 0, 0) in rep.relative and (0, 0, 0) not in rep.absolute


@pytest.mark.parametrize("E_name,alpha,i,expected", [
    ("k", (0, 0, 0), 0, True),
    ("node", (0, 0), 0, True),
    ("a3", (0, 0, 0), 0, False),
])
def test_relative_criterion(node, a3, k_a3, E_name, alpha, i, expected):
    E = {"k": k_a3, "node": node.as_ideal(), "a3": a3.as_ideal()}[E_name]
    assert is_relative_maximal_by_criterion(E, alpha, i) is expected
    if expected:
        assert alpha in relative_maximals(E)


def test_p1_has_no_maximals():
    E = full_lattice(1).as_ideal()
    rep = classify_maximals(E)
    assert not rep.maximals and not rep.absolute and not rep.relative


@pytest.mark.parametrize("seed,p,bound", SMALL_CORPUS)
def test_classification_matches_definitions(seed, p, bound):
    for E in (random_good_ideal(seed, p, bound), dual(random_good_ideal(seed, p, bound)).dual):
        rep = classify_maximals(E)
        mx, ab, rel = brute_classify(E)
        assert (rep.maximals, rep.absolute, rep.relative) == (mx, ab, rel)
        assert absolute_maximals(E) == ab
        for a in rep.maximals:
            for i in range(p):
                assert is_relative_maximal_by_criterion(E, a, i) == (a in rel)
        if p == 2:
            assert rep.maximals == rep.absolute == rep.relative


def test_symmetry_check_on_k(k_a3):
    rep = symmetry_check(k_a3)
    assert rep.ok
    sym = [v for v in rep.verdicts if v.check == "symmetry" and v.alpha == (0, 0, 0)]
    assert sym and sym[0].beta == (0, 0, 0) and sym[0].holds


@pytest.mark.parametrize("seed,p,bound", SMALL_CORPUS)
def test_symmetry_and_relmax_from_dual(seed, p, bound):
    E = random_good_ideal(seed, p, bound)
    assert symmetry_check(E).ok
    assert relmax_from_dual(E) == relative_maximals(E)


def test_relmax_from_dual_examples(node, k_a3):
    assert relmax_from_dual(k_a3) == {(0, 0, 0)} == relative_maximals(k_a3)
    assert relmax_from_dual(node.as_ideal()) == {(0, 0)}
    assert relmax_from_dual(orthant_ideal(node, (2, 1))) == frozenset()


def test_report_dict_is_sorted(k_a3):
    d = classify_maximals(k_a3).to_dict()
    assert d["maximals"] == sorted(d["maximals"])
