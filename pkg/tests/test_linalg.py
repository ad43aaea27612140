import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latticewalk.linalg import check_int64, determinant, hermite_normal_form, kernel_basis, mat_vec, rank
from latticewalk.linprog import feasible_point, strictly_inside, to_integer_vector

matrices = st.integers(1, 3).flatmap(lambda d: st.integers(2, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=d, max_size=d)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_kernel_dimension_and_membership(A):
    n = len(A[0])
    K = kernel_basis(A, n)
    assert len(K) == n - rank(A, n)
    for v in K:
        assert mat_vec(A, v) == (0,) * len(A)
    assert hermite_normal_form(K, n) == [tuple(r) for r in K] or K == []


def test_determinant():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_int64_guard():
    check_int64((2**63 - 1, -(2**63 - 1)))
    with pytest.raises(OverflowError):
        check_int64((2**63,))


def _grid_feasible(ineqs, n, box=4):
    for x in itertools.product([Fraction(k, 2) for k in range(-2 * box, 2 * box + 1)], repeat=n):
        if all(sum(a * b for a, b in zip(row, x)) >= rhs for row, rhs in ineqs):
            return True
    return False


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.tuples(*[st.integers(-3, 3)] * 2), st.integers(-2, 2)), min_size=1, max_size=4))
def test_feasible_point_is_feasible(ineqs):
    x = feasible_point(2, inequalities=ineqs)
    if x is None:
        assert not _grid_feasible(ineqs, 2)
    else:
        assert all(sum(a * b for a, b in zip(row, x)) >= rhs for row, rhs in ineqs)


def test_equalities_and_strict_interior():
    x = feasible_point(3, equalities=[((1, 1, 1), 3)], inequalities=[((1, 0, 0), 2)])
    assert sum(x) == 3 and x[0] >= 2
    assert feasible_point(1, inequalities=[((1,), 1), ((-1,), 0)]) is None
    p = strictly_inside([(1, 0), (0, 1)], 2)
    assert p[0] > 0 and p[1] > 0
    assert strictly_inside([(1, 0), (-1, 0)], 2) is None
    assert to_integer_vector([Fraction(1, 2), Fraction(2, 3)]) == (3, 4)
