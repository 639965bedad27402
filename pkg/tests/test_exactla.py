from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from conductor_lab.exactla import (
    EchelonBasis,
    RatMatrix,
    format_rational,
    kernel_basis,
    rank,
    row_space_membership,
    rref,
    to_rational,
)


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def minor_rank(rows):
    """Largest k with a nonzero k x k minor."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for k in range(min(nr, nc), 0, -1):
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                if leibniz_det([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


small_matrices = st.integers(0, 4).flatmap(
    lambda r: st.integers(0, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: (rows, c))))


def test_rank_examples():
    assert rank(RatMatrix([], cols=0)) == 0
    assert rank(RatMatrix.identity(2)) == 2
    assert rank(RatMatrix([[1, 2], [2, 4]])) == 1


def test_rank_with_fractions():
    assert rank(RatMatrix([["1/2", "1/3"], [3, 2]])) == 1
    assert rank(RatMatrix([["1/2", "1/3"], [3, 1]])) == 2


@settings(max_examples=300, deadline=None)
@given(small_matrices)
def test_rank_matches_minor_enumeration(data):
    rows, c = data
    assert rank(RatMatrix(rows, cols=c)) == minor_rank([[Fraction(x) for x in r] for r in rows])


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_kernel_vectors_are_annihilated(data):
    rows, c = data
    m = RatMatrix(rows, cols=c)
    basis = kernel_basis(m)
    assert len(basis) + rank(m) == c
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(3)) == []
    (v,) = kernel_basis(RatMatrix([[1, 1]]))
    assert v[0] == -v[1] != 0
    assert len(kernel_basis(RatMatrix.zeros(2, 3))) == 3


def test_row_space_membership_examples():
    assert row_space_membership(RatMatrix.identity(3), [5, "-1/2", 7])
    assert not row_space_membership(RatMatrix([[1, 0]]), [0, 1])
    assert row_space_membership(RatMatrix([[1, 1]]), [2, 2])
    with pytest.raises(ValueError):
        row_space_membership(RatMatrix([[1, 1]]), [1])


def test_rref_is_reduced():
    rows, pivots = rref(RatMatrix([[2, 4, 1], [1, 2, 0], [0, 0, 3]]))
    assert pivots == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_echelon_basis_agrees_with_dense_rank(data):
    rows, c = data
    eb = EchelonBasis()
    for r in rows:
        eb.add({j: Fraction(x) for j, x in enumerate(r) if x})
    assert len(eb) == rank(RatMatrix(rows, cols=c))
    for r in rows:
        assert {j: Fraction(x) for j, x in enumerate(r) if x} in eb


def test_rationals_are_exact():
    assert to_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    assert format_rational(Fraction(5)) == "5/1"
    with pytest.raises(TypeError):
        to_rational(0.5)
