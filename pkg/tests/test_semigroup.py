from itertools import product

import pytest

from conductor_lab.errors import EmptyGenerators, NotAMember, NotCoprime
from conductor_lab.semigroup import (
    NumericalSemigroup,
    sg_apery,
    sg_conductor,
    sg_delta,
    sg_gaps,
    sg_is_symmetric,
    sg_new,
    sg_pseudo_frobenius,
    sg_type,
)

from conftest import FAMILY_12


def brute_members(gens, bound):
    """All sums of generators up to ``bound``, by enumerating coefficient vectors."""
    out = set()
    ranges = [range(bound // a + 1) for a in gens]
    for coeffs in product(*ranges):
        s = sum(c * a for c, a in zip(coeffs, gens))
        if s <= bound:
            out.add(s)
    return out


def test_anchor_semigroups():
    s = sg_new([4, 6, 9])
    assert [n for n in range(14) if n in s] == [0, 4, 6, 8, 9, 10, 12, 13]
    assert sg_gaps(s) == [1, 2, 3, 5, 7, 11]
    assert sg_conductor(s) == 12
    s = sg_new([5, 7, 9])
    assert sg_gaps(s) == [1, 2, 3, 4, 6, 8, 11, 13]
    assert sg_conductor(s) == 14
    assert sg_conductor(sg_new([3, 4, 5])) == 3


def test_small_cases():
    s = sg_new([1])
    assert (s.conductor, s.frobenius, s.gaps) == (0, -1, ())
    assert sg_gaps(sg_new([3, 4, 5])) == [1, 2]
    assert sg_delta(sg_new([2, 3])) == 1
    assert sg_delta(sg_new([3, 4, 5])) == 2
    assert sg_delta(s) == 0


def test_errors():
    with pytest.raises(NotCoprime):
        sg_new([2, 4])
    with pytest.raises(EmptyGenerators):
        sg_new([])
    with pytest.raises(ValueError):
        sg_new([0, 3])


def test_apery():
    assert sg_apery(sg_new([2, 3]), 2) == [0, 3]
    assert sg_apery(sg_new([1]), 1) == [0]
    assert sg_apery(sg_new([3, 4, 5]), 3) == [0, 4, 5]
    with pytest.raises(NotAMember):
        sg_apery(sg_new([3, 4, 5]), 2)


def test_pseudo_frobenius_and_type():
    assert sg_pseudo_frobenius(sg_new([3, 4, 5])) == [1, 2]
    assert sg_pseudo_frobenius(sg_new([2, 3])) == [1]
    assert sg_pseudo_frobenius(sg_new([5, 7, 9])) == [11, 13]
    assert sg_type(sg_new([3, 4, 5])) == 2
    assert sg_type(sg_new([2, 3])) == 1
    assert sg_type(sg_new([1])) == 1


def test_symmetry():
    assert not sg_is_symmetric(sg_new([3, 4, 5]))
    assert sg_is_symmetric(sg_new([2, 3]))
    # members 0,4,6,8,9,10 pair with gaps 11,7,5,3,2,1
    assert sg_is_symmetric(sg_new([4, 6, 9]))
    assert sg_is_symmetric(sg_new([4, 5, 6]))
    assert not sg_is_symmetric(sg_new([5, 7, 9]))


@pytest.mark.parametrize("gens", FAMILY_12)
def test_family_invariants(gens):
    s = NumericalSemigroup(gens)
    c, f = s.conductor, s.frobenius
    assert c == f + 1
    assert len(s.gaps) == s.delta
    assert all(1 <= g <= f for g in s.gaps)
    members = [n for n in range(2 * c + 1) if n in s]
    assert all(a + b in s for a in members for b in members if a + b < 2 * c)
    assert {n for n in range(2 * c + 1) if n in s} == brute_members(gens, 2 * c)
    if c > 0:
        assert f not in s
        assert f in sg_pseudo_frobenius(s)
    symmetric = sg_is_symmetric(s)
    assert symmetric == (c == 2 * s.delta) == (sg_type(s) == 1)


@pytest.mark.parametrize("gens", FAMILY_12[::7])
def test_apery_is_least_per_class(gens):
    s = NumericalSemigroup(gens)
    m = s.multiplicity
    ap = sg_apery(s, m)
    for i, w in enumerate(ap):
        assert w % m == i and w in s
        assert all(x not in s for x in range(i, w, m))
