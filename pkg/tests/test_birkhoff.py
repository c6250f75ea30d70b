from fractions import Fraction
from itertools import combinations

import pytest

from truncpascal.arithmetic import binom, factorial
from truncpascal.birkhoff import (
    BirkhoffSystem,
    Functional,
    apply,
    data_map,
    extended_system,
    system_from_incidence,
    system_matrix,
)
from truncpascal.incidence import IncidenceMatrix, enumerate_incidence, is_polya
from truncpascal.matrix import det, is_invertible
from truncpascal.pascal import truncated
from truncpascal.selection import complement


def derivative_over_factorial(node, order, degree):
    """Differentiate t**degree ``order`` times term by term, evaluate, divide by order!."""
    coeff = 1
    power = degree
    for _ in range(order):
        coeff *= power
        power -= 1
        if coeff == 0:
            return Fraction(0)
    return Fraction(coeff) * Fraction(node) ** power / factorial(order)


def test_apply_examples():
    assert apply(Functional(1, 2), 5) == 10
    assert apply(Functional(0, 3), 3) == 1
    assert apply(Functional(0, 3), 6) == 0
    assert apply(Functional(1, 7), 2) == 0


def test_apply_matches_direct_differentiation():
    for node in (Fraction(0), Fraction(1), Fraction(-2), Fraction(3, 5)):
        for order in range(7):
            for degree in range(9):
                assert apply(Functional(node, order), degree) == derivative_over_factorial(node, order, degree)


def test_node_one_gives_binomials():
    for order in range(12):
        for degree in range(12):
            assert apply(Functional(1, order), degree) == binom(degree, order)


def test_system_matrix_is_truncated_pascal():
    s = BirkhoffSystem(tuple(data_map(1, [0, 1, 2])), (1, 2, 5))
    assert system_matrix(s) == truncated([0, 1, 2], [1, 2, 5])
    assert system_matrix(BirkhoffSystem((), ())).shape == (0, 0)


def test_node_zero_on_own_degrees_is_identity():
    xbar = complement([1, 2, 5, 8], 8)
    s = BirkhoffSystem(tuple(data_map(0, xbar)), tuple(xbar))
    m = system_matrix(s)
    assert m.rows() == [[int(i == j) for j in range(len(xbar))] for i in range(len(xbar))]


@pytest.mark.parametrize("n", range(7))
def test_lemma_data_map_factorisation(n):
    for size in range(1, n + 2):
        sels = list(combinations(range(n + 1), size))
        for r in sels:
            for x in sels:
                s = BirkhoffSystem(tuple(data_map(1, r)), tuple(x))
                assert system_matrix(s) == truncated(r, x)


def test_extended_example_block_structure():
    r, x, n = [0, 2, 4, 7], [1, 2, 5, 8], 8
    xbar = [0, 3, 4, 6, 7]
    m = extended_system(r, x, n)
    assert m.shape == (9, 9)
    cols = x + xbar
    for i, ri in enumerate(r):
        for j, deg in enumerate(cols):
            assert m[i, j] == binom(deg, ri)
    for i in range(5):
        for j in range(9):
            assert m[4 + i, j] == (1 if j == 4 + i else 0)
    assert det(m) == det(truncated(r, x)) == 40


def test_extended_full_selection_has_no_lower_blocks():
    full = list(range(5))
    assert extended_system(full, full, 4) == truncated(full, full)


@pytest.mark.parametrize("n", range(7))
def test_extended_det_equals_truncated_det(n):
    for size in range(1, n + 2):
        sels = list(combinations(range(n + 1), size))
        for r in sels:
            for x in sels:
                m = extended_system(r, x, n)
                k = len(r)
                assert all(m[i, j] == 0 for i in range(k, n + 1) for j in range(k))
                assert all(m[i, j] == (i == j) for i in range(k, n + 1) for j in range(k, n + 1))
                assert det(m) == det(truncated(r, x))


def test_system_from_incidence_examples():
    first = IncidenceMatrix.from_rows([0, 1, 0, 1, 0, 0], [1, 0, 1, 1, 0, 1])
    second = IncidenceMatrix.from_rows([0, 1, 0, 0, 1, 1], [0, 1, 1, 0, 1, 0])
    assert is_invertible(system_matrix(system_from_incidence(first, (0, 1))))
    assert not is_invertible(system_matrix(system_from_incidence(second, (0, 1))))
    ident = system_from_incidence(IncidenceMatrix.identity(5))
    assert all(f.node == 1 for f in ident.functionals)
    assert det(system_matrix(ident)) == 1


def test_system_from_incidence_ordering():
    e = IncidenceMatrix.from_rows([1, 0, 1], [0, 1, 0])
    s = system_from_incidence(e, (Fraction(1, 2), 3))
    assert s.functionals == (Functional(Fraction(1, 2), 0), Functional(Fraction(1, 2), 2), Functional(3, 1))
    assert s.degrees == (0, 1, 2)


@pytest.mark.parametrize("n", range(6))
def test_polya_iff_invertible(n):
    for e in enumerate_incidence(n):
        assert is_invertible(system_matrix(system_from_incidence(e, (0, 1)))) is is_polya(e)
