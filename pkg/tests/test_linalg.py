from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pseudocones.linalg import (
    DimensionError, LinMap, apply, determinant, dot, format_rational, inverse_transpose,
    nullspace, parse_rational, primitive, rank, rational, vector,
)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_dot_exact():
    assert dot(vector(["1/2", "1/3"]), vector([6, 9])) == 6


def test_dot_dimension_mismatch():
    with pytest.raises(DimensionError):
        dot((1, 2), (1, 2, 3))


def test_inverse_transpose_example():
    g = LinMap([[2, 0], [0, 1]])
    assert inverse_transpose(g) == LinMap([[Fraction(1, 2), 0], [0, 1]])


def test_singular_map_rejected():
    with pytest.raises(ValueError):
        LinMap([[1, 2], [2, 4]])


@pytest.mark.parametrize("text,value", [("3", 3), ("-7/4", Fraction(-7, 4)), ("4/2", 2), ("0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "", " 2", "1e3", "a/b"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_canonical():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-5)) == "-5"


def test_floats_refused():
    with pytest.raises(TypeError):
        rational(0.5)


def test_rank_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows) == 2
    (v,) = nullspace(rows, 3)
    assert all(dot(r, v) == 0 for r in rows)


def test_primitive():
    assert primitive((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)


def test_determinant_against_cofactor():
    m = [[2, -1, 0], [1, 3, 5], [4, 0, -2]]
    cof = (2 * (3 * -2 - 5 * 0) - (-1) * (1 * -2 - 5 * 4) + 0)
    assert determinant(m) == cof


@given(st.lists(rats, min_size=3, max_size=3), st.lists(rats, min_size=3, max_size=3))
def test_dot_symmetric_and_bilinear(a, b):
    assert dot(a, b) == dot(b, a)
    assert dot([2 * x for x in a], b) == 2 * dot(a, b)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(rats, min_size=3, max_size=3), st.lists(rats, min_size=3, max_size=3))
def test_inverse_transpose_preserves_pairing(rows, x, y):
    if determinant(rows) == 0:
        return
    g = LinMap(rows)
    # <g x, g^{-T} y> = <x, y>
    assert dot(apply(g, x), apply(inverse_transpose(g), y)) == dot(x, y)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=2))
def test_inverse_roundtrip(rows):
    if determinant(rows) == 0:
        return
    g = LinMap(rows)
    assert g @ g.inverse() == LinMap.identity(2)
