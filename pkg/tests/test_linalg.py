from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie.errors import DimensionMismatchError, ParseError
from homlie.services.linalg import (
    Matrix, SubspaceBasis, format_rational, nullspace, parse_rational, rank, rref, solve,
)

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@pytest.mark.parametrize("text,expected", [
    ("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), ("0", Fraction(0)), ("10/5", Fraction(2)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "a", "--1", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text, path="x")


def test_format_rational():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(4) == "4"


def test_rref_and_pivots():
    m = Matrix.from_rows([[2, 4, 0], [1, 2, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 2]
    assert reduced.row(0) == (1, 2, 0)
    assert reduced.row(1) == (0, 0, 1)


def test_nullspace_basis():
    m = Matrix.from_rows([[1, 1, 0], [0, 0, 1]])
    kernel = nullspace(m)
    assert kernel.dim == 1
    assert kernel.contains((1, -1, 0))
    assert not kernel.contains((1, 1, 0))


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve(m, [1, 2]) == (1, 0)
    assert solve(m, [1, 3]) is None


def test_inverse_and_power():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert m.power(-1) == m.inverse()
    assert m.power(0) == Matrix.identity(2)


def test_zero_sized_matrices():
    empty = Matrix.zeros(0, 3)
    assert rank(empty) == 0
    assert nullspace(empty) == SubspaceBasis.full(3)


def test_subspace_equality_is_canonical():
    a = SubspaceBasis.span(3, [(1, 1, 0), (0, 1, 1)])
    b = SubspaceBasis.span(3, [(1, 0, -1), (2, 3, 1)])
    assert a == b


def test_subspace_intersection_and_sum():
    a = SubspaceBasis.span(3, [(1, 0, 0), (0, 1, 0)])
    b = SubspaceBasis.span(3, [(0, 1, 0), (0, 0, 1)])
    assert (a.intersect(b)) == SubspaceBasis.span(3, [(0, 1, 0)])
    assert (a + b).is_full()


def test_span_rejects_wrong_length():
    with pytest.raises(DimensionMismatchError):
        SubspaceBasis.span(2, [(1, 2, 3)])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    assert rank(m) + nullspace(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_vectors_are_annihilated(rows):
    m = Matrix.from_rows(rows)
    for v in nullspace(m).vectors:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_solve_recovers_image(rows, data):
    m = Matrix.from_rows(rows)
    x = data.draw(st.lists(small, min_size=m.cols, max_size=m.cols))
    b = m.apply([Fraction(v) for v in x])
    y = solve(m, b)
    assert y is not None
    assert m.apply(y) == b
