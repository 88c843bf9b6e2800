from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from bncount.errors import PreconditionError
from bncount.numeric import (
    FactorialTable,
    elementary_symmetric,
    exact_det,
    factorial_det,
    factorial_det_closed_form,
    factorial_matrix,
    inv_factorial,
)


def leibniz_det(m):
    """Permutation-sum determinant; independent of the elimination code."""
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod((m[i][perm[i]] for i in range(n)), start=Fraction(1))
    return total


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (-3, Fraction(0)), (4, Fraction(1, 24))])
def test_inv_factorial_examples(n, expected):
    assert inv_factorial(n) == expected


def test_inv_factorial_inverts_factorial():
    for n in range(51):
        assert inv_factorial(n) * factorial(n) == 1


def test_factorial_table_beyond_bound():
    table = FactorialTable(bound=5)
    assert table.bound == 5
    assert table(5) == 120
    assert table(30) == factorial(30)
    with pytest.raises(ValueError):
        table(-1)


@pytest.mark.parametrize("a, k, expected", [((0, 2), 1, 2), ((0, 2), 2, 0), ((1, 2, 3), 3, 6), ((1, 2, 3, 4), 4, 24)])
def test_elementary_symmetric_examples(a, k, expected):
    assert elementary_symmetric(a, k) == expected


def test_elementary_symmetric_against_subsets():
    a = (3, -1, 4, 1, 5, 9)
    for k in range(1, 5):
        assert elementary_symmetric(a, k) == sum(prod(c) for c in combinations(a, k))


@pytest.mark.parametrize("k", [0, 5])
def test_elementary_symmetric_degree_out_of_range(k):
    with pytest.raises(PreconditionError):
        elementary_symmetric((1, 2, 3, 4, 5), k)


def test_elementary_symmetric_longer_than_list():
    with pytest.raises(PreconditionError):
        elementary_symmetric((1, 2), 3)


@given(st.lists(st.integers(-50, 50), min_size=4, max_size=8), st.randoms(use_true_random=False), st.integers(1, 4))
def test_elementary_symmetric_permutation_invariant(a, rnd, k):
    b = list(a)
    rnd.shuffle(b)
    assert elementary_symmetric(a, k) == elementary_symmetric(b, k)


@pytest.mark.parametrize("b, expected", [((0, 1), Fraction(1)), ((1, 2), Fraction(1, 2)), ((0, 2), Fraction(1))])
def test_factorial_det_examples(b, expected):
    assert leibniz_det(factorial_matrix(b)) == expected
    assert factorial_det(b) == expected


def test_factorial_matrix_layout():
    # rows b_1 then b_0; right column is 1/b_i!
    assert factorial_matrix((0, 1)) == [[1, 1], [0, 1]]


def test_factorial_det_matches_leibniz_small():
    for n in range(1, 5):
        for b in combinations(range(8), n):
            assert factorial_det(b) == leibniz_det(factorial_matrix(b))


def test_factorial_det_closed_form_exhaustive():
    for n in range(1, 7):
        for b in combinations(range(13), n):
            assert factorial_det(b) == factorial_det_closed_form(b)


@pytest.mark.parametrize("b", [(1, 1), (2, 1), (-1, 2)])
def test_factorial_det_rejects_bad_input(b):
    with pytest.raises(PreconditionError):
        factorial_det(b)


def test_exact_det_swaps_rows():
    assert exact_det([[0, 1], [1, 0]]) == -1
    assert exact_det([[1, 2], [2, 4]]) == 0
