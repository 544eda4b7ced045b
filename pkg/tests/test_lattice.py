import pytest
from hypothesis import given
from hypothesis import strategies as st

from valmax import lattice as L
from valmax.lattice import Box, DimensionError


def pts(p):
    return st.tuples(*[st.integers(-20, 20)] * p)


@pytest.mark.parametrize("a,b,expected", [
    ((3, 1), (2, 5), (2, 1)),
    ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
    ((1, 4, 2), (4, 1, 2), (1, 1, 2)),
])
def test_inf_examples(a, b, expected):
    assert L.inf(a, b) == expected


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        L.inf((1, 2), (1, 2, 3))
    with pytest.raises(DimensionError):
        L.add((1,), (1, 2))


@pytest.mark.parametrize("v,alpha,J,expected", [
    ((1, 2, 3), (1, 1, 1), [0], True),
    ((1, 1, 3), (1, 1, 1), [0], False),
    ((0, 0, 0), (0, 0, 0), [0, 1, 2], True),
])
def test_in_delta_J_examples(v, alpha, J, expected):
    assert L.in_delta_J(v, alpha, J) is expected


@pytest.mark.parametrize("v,alpha,expected", [
    ((0, 1, 1), (0, 0, 0), True),
    ((0, 0, 1), (0, 0, 0), False),
    ((1, 1), (0, 0), False),
])
def test_in_delta_examples(v, alpha, expected):
    assert L.in_delta(v, alpha) is expected


def test_empty_index_set_rejected():
    with pytest.raises(ValueError):
        L.in_delta_J((1, 1), (0, 0), [])
    with pytest.raises(ValueError):
        L.index_set([0, 0], 2)
    with pytest.raises(ValueError):
        L.index_set([2], 2)


def test_point_rejects_bad_coordinates():
    with pytest.raises(TypeError):
        L.point([1.5, 2])
    with pytest.raises(TypeError):
        L.point([True, 2])
    with pytest.raises(OverflowError):
        L.point([10**7, 0])
    with pytest.raises(DimensionError):
        L.point([])


def test_coord_limit_is_configurable():
    old = L.COORD_LIMIT
    try:
        L.set_coord_limit(5)
        with pytest.raises(OverflowError):
            L.add((3, 0), (3, 0))
        with pytest.raises(ValueError):
            L.set_coord_limit(0)
    finally:
        L.set_coord_limit(old)


@given(pts(3), pts(3), pts(3))
def test_inf_sup_lattice_laws(a, b, c):
    assert L.inf(a, b) == L.inf(b, a)
    assert L.inf(a, L.inf(b, c)) == L.inf(L.inf(a, b), c)
    assert L.sup(a, L.inf(a, b)) == a
    assert L.leq(L.inf(a, b), a) and L.leq(a, L.sup(a, b))
    assert L.sub(L.add(a, b), b) == a


@given(pts(3), pts(3))
def test_in_delta_is_union_of_singletons(v, alpha):
    union = any(L.in_delta_J(v, alpha, [i]) for i in range(3))
    assert L.in_delta(v, alpha) == union


@given(pts(3), pts(3), st.integers(1, 6))
def test_delta_J_characterisation(v, alpha, m):
    J = L.from_mask(m, 3)
    expected = {i for i in range(3) if v[i] == alpha[i]} == J and all(
        v[i] > alpha[i] for i in range(3) if i not in J)
    assert L.in_delta_J(v, alpha, J) == expected


def test_box_iteration_and_array():
    b = Box((0, 1), (1, 2))
    assert list(b) == [(0, 1), (0, 2), (1, 1), (1, 2)]
    assert len(b) == 4
    assert L.box_array(b.lo, b.hi).tolist() == [list(v) for v in b]
    assert (1, 1) in b and (2, 1) not in b
    assert b.clamp((5, -3)) == (1, 1)
    with pytest.raises(ValueError):
        Box((1, 0), (0, 0))


def test_masks_roundtrip():
    for m in L.proper_subsets(3):
        assert L.mask(L.from_mask(m, 3)) == m
    assert L.proper_subsets(2) == [1, 2]
