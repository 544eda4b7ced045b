import itertools

import pytest

from valmax.core import GoodSemigroup, orthant_ideal
from valmax.duality import canonical_values


def node_semigroup():
    return GoodSemigroup((1, 1), {(0, 0), (1, 1)})


def three_axes():
    return GoodSemigroup((1, 1, 1), {(0, 0, 0), (1, 1, 1)})


@pytest.fixture
def node():
    return node_semigroup()


@pytest.fixture
def a3():
    return three_axes()


@pytest.fixture
def k_a3():
    return canonical_values(three_axes())


@pytest.fixture
def node_max():
    return orthant_ideal(node_semigroup(), (1, 1))


def box_points(lo, hi):
    return itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)])


def members(E, lo, hi):
    """All members of E in [lo, hi] by plain membership queries."""
    return [v for v in box_points(lo, hi) if E.contains(v)]


# small deterministic corpus for the unit-level property tests
SMALL_CORPUS = [(s, 2, 5) for s in range(1, 9)] + [(s, 3, 4) for s in range(1, 7)]
