from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dingstab.linalg import (
    SingularMatrix,
    determinant,
    dot,
    format_rational,
    identity,
    mat,
    mat_mul,
    mat_vec,
    parse_rational,
    rank,
    solve_linear,
    vec,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)


@given(rationals, rationals, rationals)
def test_rational_arithmetic_properties(a, b, c):
    assert a + (-a) == 0
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@given(rationals)
def test_rational_stored_reduced(a):
    assert a.denominator > 0
    assert gcd(abs(a.numerator), a.denominator) == 1
    assert Fraction(0).numerator == 0 and Fraction(0).denominator == 1


def test_format_rational_contract():
    assert format_rational(Fraction(1818, 1973)) == "1818/1973"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(-972, 1973)) == "-972/1973"
    assert format_rational(Fraction(4, 2)) == "2"


def test_parse_rational_roundtrip():
    for text in ["1818/1973", "0", "-972/1973", "7"]:
        assert format_rational(parse_rational(text)) == text
    with pytest.raises(ValueError):
        parse_rational("1 2 x")
    with pytest.raises(ValueError):
        parse_rational("3/0")


def test_solve_identity():
    assert solve_linear(identity(3), vec([1, 2, 3])) == vec([1, 2, 3])


def test_solve_diagonal():
    a = mat([[2, 0], [0, 4]])
    assert solve_linear(a, vec([1, 1])) == (Fraction(1, 2), Fraction(1, 4))


def test_solve_rational_entries():
    a = mat([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), 1]])
    b = vec([1, 2])
    x = solve_linear(a, b)
    assert mat_vec(a, x) == b


def test_solve_singular_raises():
    with pytest.raises(SingularMatrix):
        solve_linear(mat([[1, 2], [2, 4]]), vec([1, 1]))


def test_determinant_examples():
    assert determinant(identity(4)) == 1
    assert determinant(mat([[0, 1], [1, 0]])) == -1
    # 2x2 cofactor expansions done by hand.
    assert determinant(mat([[1, 0], [-2, -1]])) == -1
    assert determinant(mat([[-1, 1], [-2, -1]])) == 3


def test_determinant_rational_scaling():
    a = mat([[Fraction(1, 2), 0], [0, Fraction(2, 3)]])
    assert determinant(a) == Fraction(1, 3)


small_int_matrices = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@given(small_int_matrices, small_int_matrices)
def test_determinant_multiplicative(a_rows, b_rows):
    if len(a_rows) != len(b_rows):
        return
    a, b = mat(a_rows), mat(b_rows)
    assert determinant(mat_mul(a, b)) == determinant(a) * determinant(b)


@given(small_int_matrices, st.lists(st.integers(-9, 9), min_size=2, max_size=4))
def test_solve_zero_residual(a_rows, b_entries):
    n = len(a_rows)
    if len(b_entries) < n:
        return
    a = mat(a_rows)
    b = vec(b_entries[:n])
    if determinant(a) == 0:
        with pytest.raises(SingularMatrix):
            solve_linear(a, b)
    else:
        x = solve_linear(a, b)
        assert mat_vec(a, x) == b


def test_rank():
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(identity(3)) == 3
    assert rank(mat([[0, 0], [0, 0]])) == 0
    assert rank(mat([[1, 2, 3], [4, 5, 6], [5, 7, 9]])) == 2


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError):
        dot(vec([1, 2]), vec([1, 2, 3]))
