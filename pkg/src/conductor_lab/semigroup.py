"""Numerical semigroups and their combinatorial invariants."""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, List, Tuple

from .errors import EmptyGenerators, NonPositiveGenerator, NotAMember, NotCoprime


class NumericalSemigroup:
    """The additive monoid generated by coprime positive integers.

    Membership is decided by a coin-problem table on ``[0, conductor)``;
    everything at or beyond the conductor is a member.
    """

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(a) for a in generators))
        if not gens:
            raise EmptyGenerators("a numerical semigroup needs at least one generator")
        if gens[0] < 1:
            raise NonPositiveGenerator(f"generators must be positive, got {gens[0]}")
        if reduce(gcd, gens) != 1:
            raise NotCoprime(f"gcd of {gens} is {reduce(gcd, gens)}, not 1")
        self.generators: Tuple[int, ...] = tuple(gens)
        table, c = _membership_table(self.generators)
        self._table = tuple(table[:c])
        self.conductor = c
        self.frobenius = c - 1
        self.gaps: Tuple[int, ...] = tuple(n for n in range(1, c) if not table[n])

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self._table[n]

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        return "NumericalSemigroup<{}>".format(",".join(map(str, self.generators)))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def members_below(self, bound: int) -> List[int]:
        return [n for n in range(max(bound, 0)) if n in self]

    def apery(self, m: int) -> List[int]:
        return sg_apery(self, m)

    def pseudo_frobenius(self) -> List[int]:
        return sg_pseudo_frobenius(self)

    def type(self) -> int:
        return sg_type(self)

    def is_symmetric(self) -> bool:
        return sg_is_symmetric(self)

    @property
    def delta(self) -> int:
        return len(self.gaps)


def _membership_table(gens: Tuple[int, ...]) -> Tuple[List[bool], int]:
    # grow the table until a run of `smallest generator` consecutive members
    m = gens[0]
    table = [True]
    run = 1
    n = 0
    while run < m:
        n += 1
        hit = any(n - a >= 0 and table[n - a] for a in gens)
        table.append(hit)
        run = run + 1 if hit else 0
    c = n + 1 - run
    return table, c


def sg_new(generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


def sg_gaps(s: NumericalSemigroup) -> List[int]:
    return list(s.gaps)


def sg_conductor(s: NumericalSemigroup) -> int:
    return s.conductor


def sg_delta(s: NumericalSemigroup) -> int:
    return len(s.gaps)


def sg_apery(s: NumericalSemigroup, m: int) -> List[int]:
    """Least member of each residue class mod ``m``, indexed by residue."""
    if m <= 0 or m not in s:
        raise NotAMember(f"{m} is not a positive member of {s!r}")
    found = [None] * m
    missing = m
    n = 0
    while missing:
        if n in s and found[n % m] is None:
            found[n % m] = n
            missing -= 1
        n += 1
    return found


def sg_pseudo_frobenius(s: NumericalSemigroup) -> List[int]:
    """Gaps ``f`` with ``f + s`` a member for every nonzero member ``s``."""
    if s.conductor == 0:
        return []
    bound = s.conductor + s.frobenius
    positives = [x for x in range(1, bound + 1) if x in s]
    return [f for f in s.gaps if all(f + x in s for x in positives)]


def sg_type(s: NumericalSemigroup) -> int:
    """Cohen-Macaulay type; the smooth semigroup has type 1."""
    if s.conductor == 0:
        return 1
    return len(sg_pseudo_frobenius(s))


def sg_is_symmetric(s: NumericalSemigroup) -> bool:
    f = s.frobenius
    return all((n in s) != (f - n in s) for n in range(0, f + 1))
