"""Closed-form dimension counts: Riemann-Roch, ribbons, cyclic quotients.

``None`` means *undetermined*: Riemann-Roch alone does not fix ``h^0`` for a
general bundle of degree in ``[0, 2g - 2]``, and nothing here guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

KINDS = ("general", "structure", "canonical", "bicanonical", "anticanonical")


@dataclass(frozen=True)
class RRDims:
    genus: int
    degree: int
    h0: Optional[int]
    h1: Optional[int]

    @property
    def determined(self) -> bool:
        return self.h0 is not None and self.h1 is not None


def _degree(g: int, kind: str, d: Optional[int]) -> int:
    fixed = {"structure": 0, "canonical": 2 * g - 2,
             "bicanonical": 4 * g - 4, "anticanonical": 2 - 2 * g}
    if kind == "general":
        if d is None:
            raise ValueError("a general bundle needs a degree")
        return d
    if kind not in fixed:
        raise ValueError(f"unknown bundle kind {kind!r}; choose from {', '.join(KINDS)}")
    if d is not None and d != fixed[kind]:
        raise ValueError(f"the {kind} bundle has degree {fixed[kind]}, not {d}")
    return fixed[kind]


def rr_dims(g: int, d: Optional[int] = None, kind: str = "general") -> RRDims:
    """``h^0`` and ``h^1`` of a line bundle on a smooth curve of genus ``g``."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    deg = _degree(g, kind, d)
    if kind == "structure" or (g == 1 and kind != "general"):
        # on an elliptic curve every named bundle is trivial
        return RRDims(g, deg, 1, g)
    if kind == "canonical":
        return RRDims(g, deg, g, 1)
    if deg < 0:
        return RRDims(g, deg, 0, g - 1 - deg)
    if deg > 2 * g - 2:
        return RRDims(g, deg, deg - g + 1, 0)
    return RRDims(g, deg, None, None)


def ribbon_ext_dim(g: int, deg_ideal: int) -> Optional[int]:
    """``h^1`` of the ribbon's ideal sheaf, via Serre duality.

    Equals ``h^0`` of ``omega`` twisted by the dual ideal, a bundle of degree
    ``2g - 2 - deg_ideal``.
    """
    return rr_dims(g, 2 * g - 2 - deg_ideal).h0


def ribbon_local_defect(split: bool = False) -> int:
    """Catalog value for a ribbon point: 1, or 0 for the split ribbon."""
    return 0 if split else 1


@dataclass(frozen=True)
class QuotientVerdict:
    r: int
    weights: tuple
    gorenstein: bool
    claimed_defect: int
    isolated: bool


def cyclic_quotient_gorenstein(r: int, a: int, b: int) -> QuotientVerdict:
    """Gorenstein test for ``C^3 / (1/r)(1, a, b)``.

    Gorenstein iff ``1 + a + b = 0 mod r``.  ``claimed_defect`` is the
    asserted value ``r - 1`` for the non-Gorenstein case; there is no
    independent check of it here.  ``isolated`` reports whether all weights
    are prime to ``r`` and is not enforced.
    """
    if r < 1:
        raise ValueError("group order must be positive")
    a, b = a % r, b % r
    gor = (1 + a + b) % r == 0
    isolated = all(gcd(w, r) == 1 for w in (1, a, b))
    return QuotientVerdict(r, (1, a, b), gor, 0 if gor else r - 1, isolated)
