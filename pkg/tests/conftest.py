from functools import reduce
from itertools import combinations
from math import gcd

import pytest


def semigroup_family(top, max_size=3):
    """Generator sets drawn from {2, ..., top} of size <= max_size with gcd 1."""
    return [c for k in range(1, max_size + 1) for c in combinations(range(2, top + 1), k)
            if reduce(gcd, c) == 1]


FAMILY_9 = semigroup_family(9)
FAMILY_12 = semigroup_family(12)


@pytest.fixture(scope="session")
def family9():
    return FAMILY_9
