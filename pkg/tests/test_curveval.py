from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valmax.core import validate
from valmax.curveval import (CurveSpec, FitError, NotStabilizedError, PolySyntaxError,
                             fit_good_ideal, ingest_curve, parse_poly, sample_value_set, value_of)
from valmax.lattice import Box


def lines(p, T, gens=("1",)):
    return CurveSpec.from_dict({"m": p, "T": T, "generators": list(gens),
                                "branches": [{f"x{i + 1}": [[1, 1, 1]]} for i in range(p)]})


NODE = lines(2, 6)


@pytest.mark.parametrize("f,expected", [
    ("x1+x2", (1, 1)),
    ("x1^5 + x2", (5, 1)),
    ("x1", (1, None)),
    ("3 - x1*x2", (0, 0)),
    ("x1*x2", (None, None)),
])
def test_value_of_node(f, expected):
    assert value_of(f, NODE) == expected


def test_parser_arithmetic():
    p = parse_poly("(x1 + 1/2)^2 - x1^2", 2)
    assert p == {(1, 0): Fraction(1), (0, 0): Fraction(1, 4)}
    assert parse_poly("-x2 + x2", 2) == {}
    assert parse_poly("2*3", 1) == {(0,): Fraction(6)}


@pytest.mark.parametrize("text,pos", [
    ("x1 + * 2", 5),
    ("x3", 0),
    ("(x1", 3),
    ("x1 $ 2", 3),
    ("", 0),
    ("1/0", 2),
    ("x1^x2", 3),
    ("x1 x2", 3),
])
def test_parser_error_positions(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, 2)
    assert info.value.pos == pos


def test_constant_branch_rejected():
    with pytest.raises(ValueError):
        CurveSpec.from_dict({"m": 1, "T": 4, "branches": [{"x1": [[1, 1, 0]]}], "generators": ["1"]})


def test_sample_node_contains_expected():
    sample = sample_value_set(NODE, 3, 2, 0)
    assert {(0, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)} <= sample


def test_sample_axes():
    spec = lines(3, 4)
    sample = sample_value_set(spec, 2, 2, 0)
    assert (0, 0, 0) in sample
    assert all(v == (0, 0, 0) or min(v) >= 1 for v in sample)
    assert {(1, 1, 1), (2, 1, 1), (1, 2, 2)} <= sample


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 1000), st.integers(1, 3))
def test_sample_is_sound(seed, degree):
    # every emitted point is an honest value: orders below T and inside the
    # known value semigroup of the node
    sample = sample_value_set(NODE, degree, 2, seed)
    for v in sample:
        assert all(x < NODE.T for x in v)
        assert v == (0, 0) or min(v) >= 1


def test_single_branch_cusp():
    spec = CurveSpec.from_dict({"m": 2, "T": 12, "generators": ["1"],
                                "branches": [{"x1": [[1, 1, 2]], "x2": [[1, 1, 3]]}]})
    sample = sample_value_set(spec, 6, 2, 0)
    assert {v[0] for v in sample} == {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}
    E = ingest_curve(spec)
    assert E.ambient.gamma == (2,)


def test_ingest_node():
    E = ingest_curve(NODE)
    assert E.ambient.gamma == (1, 1) and E.ambient.small == {(0, 0), (1, 1)}
    assert E.small == E.ambient.small


def test_ingest_node_maximal_ideal():
    E = ingest_curve(lines(2, 6, ("x1", "x2")))
    assert (E.mu, E.gammaE, E.small) == ((1, 1), (1, 1), {(1, 1)})


def test_ingest_axes():
    E = ingest_curve(lines(3, 5))
    assert E.ambient.gamma == (1, 1, 1) and E.ambient.small == {(0, 0, 0), (1, 1, 1)}


def test_shift_moves_values():
    spec = CurveSpec.from_dict({"m": 2, "T": 6, "generators": ["1"], "shift": [-1, -1],
                                "branches": [{"x1": [[1, 1, 1]]}, {"x2": [[1, 1, 1]]}]})
    E = ingest_curve(spec)
    assert (E.mu, E.gammaE) == ((-1, -1), (0, 0))
    assert validate(E).ok


def test_fit_contains_every_sample_point():
    spec = CurveSpec.from_dict({"m": 2, "T": 8, "generators": ["1"],
                                "branches": [{"x1": [[1, 1, 1]], "x2": [[1, 1, 2]]}, {"x1": [[1, 1, 1]]}]})
    E = ingest_curve(spec)
    assert E.ambient.gamma == (2, 2)
    for v in sample_value_set(spec, spec.T, 2, 0):
        assert E.ambient.contains(v)


def test_fit_errors():
    window = Box((0, 0), (3, 3))
    with pytest.raises(FitError):
        fit_good_ideal({(0, 0)}, {(0, 0)}, window)
    with pytest.raises(FitError):
        fit_good_ideal(set(), {(0, 0), (3, 3)}, window)


def test_not_stabilized():
    # degree 1 cannot reach the top of a T = 6 window, degree 2 reaches more
    with pytest.raises(NotStabilizedError):
        ingest_curve(NODE, degree_bound=1)
