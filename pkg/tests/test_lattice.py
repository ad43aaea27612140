import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latticewalk.binomial import reduce_binomial
from latticewalk.errors import DimensionError, TerminationError
from latticewalk.lattice import is_lll_reduced, kernel_basis, lll_reduce, saturate
from latticewalk.linalg import determinant, hermite_normal_form, in_lattice, mat_vec, same_lattice
from latticewalk.order import Grading, weight_order

from helpers import binomial_poly, box_kernel_vectors, poly_basis_as_vectors, poly_groebner, random_instances

OCTAGON = ((1, 1, 1, 1, 1), (0, 1, 2, 1, 0), (0, 0, 1, 2, 1))
GENERATOR_CELL = {(2, -2, 1, 0, -1), (2, -1, 0, 1, -2), (0, -1, 1, -1, 1)}


def test_kernel_of_single_row():
    assert kernel_basis(((2, 3),)) in ([(3, -2)], [(-3, 2)])


def test_kernel_identity_is_empty():
    assert kernel_basis(((1, 0, 0), (0, 1, 0), (0, 0, 1))) == []


def test_octagon_kernel_contains_expected_vectors():
    K = kernel_basis(OCTAGON)
    assert len(K) == 2
    assert all(mat_vec(OCTAGON, v) == (0, 0, 0) for v in K)
    assert in_lattice((2, -2, 1, 0, -1), K)
    assert in_lattice((0, -1, 1, -1, 1), K)


@pytest.mark.parametrize("A", [
    ((2, 3, 5),), ((1, 2, 3), (0, 1, 4)), ((6, 10, 15),), ((1, 1, 1, 1), (0, 1, 2, 3)),
])
def test_kernel_is_saturated(A):
    """Every short kernel vector found by brute force lies in the lattice."""
    K = kernel_basis(A)
    for v in box_kernel_vectors(A, 3):
        assert in_lattice(v, K), v


def test_lll_examples():
    assert lll_reduce([(1, 0), (0, 1)]) == ((1, 0), (0, 1))
    assert lll_reduce([(2, 0), (1, 1)]) == ((1, 1), (1, -1))
    assert lll_reduce([(3, -2)]) == ((3, -2),)


def test_lll_rejects_dependent_input():
    with pytest.raises(DimensionError):
        lll_reduce([(1, 2), (2, 4)])


basis_strategy = st.integers(1, 4).flatmap(lambda k: st.integers(k, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=k, max_size=k)))


@settings(max_examples=100, deadline=None)
@given(basis_strategy)
def test_lll_transform_and_lattice(rows):
    from latticewalk.linalg import rank

    if rank(rows) < len(rows):
        return
    res = lll_reduce(rows, with_transform=True)
    assert abs(determinant(res.transform)) == 1
    for out, coeffs in zip(res.basis, res.transform):
        assert out == tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(len(rows[0])))
    assert same_lattice(res.basis, rows)
    assert is_lll_reduced(res.basis)


def test_lll_delta_parameter():
    rows = [(1, 0, 0), (4, 1, 0), (7, 3, 1)]
    tight = lll_reduce(rows, Fraction(99, 100))
    assert is_lll_reduced(tight, Fraction(99, 100))
    with pytest.raises(ValueError):
        lll_reduce(rows, Fraction(1, 5))


def test_saturate_worked_example():
    G = saturate([(-2, 1, 0), (-3, 0, 1)], weight_order((1, 0, 0)), Grading(((1, 2, 3),)))
    assert set(G.elements) == {(1, 1, -1), (2, -1, 0), (1, -2, 1), (0, -3, 2)}


def test_saturate_octagon_generator_cell():
    K = lll_reduce(kernel_basis(OCTAGON))
    G = saturate(K, weight_order((1, 0, 1, 0, 0)), Grading(OCTAGON))
    assert set(G.elements) == GENERATOR_CELL


def test_twisted_cubic_needs_saturation():
    # the ideal of these two binomials is not saturated; one plain run misses
    # the binomial bc - ad of the twisted cubic
    A = ((1, 1, 1, 1), (0, 1, 2, 3))
    B = [(1, -2, 1, 0), (0, 1, -2, 1)]
    ord = weight_order((0, 1, 1, 0))
    G = saturate(B, ord, Grading(A))
    assert (-1, 1, 1, -1) in G.elements or (1, -1, -1, 1) in G.elements
    # the oracle: a Q-Buchberger run on the known Markov basis of the cubic
    markov = [(1, -2, 1, 0), (0, 1, -2, 1), (1, -1, -1, 1)]
    oracle = poly_groebner([binomial_poly(v) for v in markov], ord.matrix)
    assert set(G.elements) == poly_basis_as_vectors(oracle, ord.matrix)


def test_saturate_positive_vector_case():
    G = saturate([(1, 1, -1), (1, 0, 0)], weight_order((1, 1, 1)))
    assert G.elements
    with pytest.raises(TerminationError):
        saturate([(1, 1, -1), (1, 0, 0)], weight_order((-1, 0, 0)))


def test_saturate_without_certificate():
    with pytest.raises(TerminationError):
        saturate([(1, -1)], grading=Grading(((1, -1),)))


def test_saturation_properties_on_random_instances():
    rng = random.Random(2)
    for A, K in random_instances(8, 40):
        ord = weight_order(tuple(rng.randint(-3, 3) for _ in A[0]))
        g = Grading(A)
        G = saturate(K, ord, g)
        assert saturate(G.elements, ord, g).elements == G.elements
        # a scrambled basis of the same lattice gives the same ideal
        if len(K) > 1:
            mixed = [tuple(a + 2 * b for a, b in zip(K[0], K[1]))] + list(K[1:])
            assert saturate(mixed, ord, g).elements == G.elements
        # every short lattice vector reduces to zero (membership in I_L)
        for v in box_kernel_vectors(A, 2)[:30]:
            assert not any(reduce_binomial(v, G.elements, ord))


def test_hnf_is_canonical():
    assert hermite_normal_form([(2, 4), (1, 3)]) == hermite_normal_form([(1, 3), (1, 1)])
