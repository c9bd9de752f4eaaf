from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fibslope.exact import (
    SingularMatrixError,
    as_fraction,
    format_rational,
    is_negative_definite_by_minors,
    ldl_pivots,
    leading_principal_minors,
    solve,
)

small = st.integers(-6, 6)


def square_matrices(max_n=5):
    return st.integers(1, max_n).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric(m):
    n = len(m)
    return [[m[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


def test_as_fraction_accepts_strings_and_ints():
    assert as_fraction("91/18") == Fraction(91, 18)
    assert as_fraction(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_fraction(True)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_format_rational_always_has_denominator():
    assert format_rational(5) == "5/1"
    assert format_rational(Fraction(-819, 162)) == "-91/18"


@given(square_matrices())
def test_minors_match_sympy_determinants(m):
    minors = leading_principal_minors(m)
    expected = [Fraction(int(sympy.Matrix(m)[:k, :k].det())) for k in range(1, len(m) + 1)]
    # Bareiss stops at the first vanishing minor
    cut = next((i + 1 for i, v in enumerate(expected) if v == 0), len(expected))
    assert minors == expected[:cut]


@given(square_matrices())
def test_ldl_pivots_reproduce_minors(m):
    s = symmetric(m)
    minors = [Fraction(int(sympy.Matrix(s)[:k, :k].det())) for k in range(1, len(s) + 1)]
    if any(v == 0 for v in minors):
        with pytest.raises(SingularMatrixError):
            ldl_pivots(s)
        return
    pivots = ldl_pivots(s)
    product = Fraction(1)
    for k, d in enumerate(pivots):
        product *= d
        assert product == minors[k]


@given(square_matrices(4), st.lists(small, min_size=4, max_size=4))
def test_solve_matches_sympy(m, rhs):
    rhs = rhs[: len(m)]
    mat = sympy.Matrix(m)
    if mat.det() == 0:
        with pytest.raises(SingularMatrixError):
            solve(m, rhs)
        return
    expected = mat.LUsolve(sympy.Matrix(rhs))
    got = solve(m, rhs)
    assert got == [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in expected]


def test_chain_gram_is_negative_definite_both_ways():
    n = 6
    gram = [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    assert is_negative_definite_by_minors(leading_principal_minors(gram), n)
    assert all(d < 0 for d in ldl_pivots(gram))
    assert not is_negative_definite_by_minors(leading_principal_minors([[-1, 1], [1, -1]]), 2)
