"""Reduced curve germs as subalgebras of a product of power-series rings.

A germ with ``r`` branches is described by finitely many algebra generators,
each an ``r``-tuple of polynomials in the branch parameters.  All invariants
are computed on the window ``prod_i k[t_i]/(t_i^N)``; coordinates in that
window are flattened as ``exponent * r + branch`` so that the smallest
coordinate of a vector is its valuation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import InvalidParametrization, TruncationTooSmall, UnknownPreset
from .exactla import EchelonBasis, RatMatrix, SparseVector, to_rational
from .semigroup import NumericalSemigroup

Poly = Dict[int, Fraction]

MAX_TRUNCATION = 1024


class TruncatedSeries:
    """A power series known modulo ``t^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Mapping[int, object], order: int):
        if order < 1:
            raise ValueError("truncation order must be positive")
        clean = {}
        for e, x in coeffs.items():
            if e < 0:
                raise ValueError("power series have no negative exponents")
            q = to_rational(x)
            if q and e < order:
                clean[int(e)] = q
        self.order = order
        self.coeffs = clean

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> "TruncatedSeries":
        return cls({exponent: coeff}, order)

    def valuation(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def __getitem__(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = dict(self.coeffs)
        for e, x in other.coeffs.items():
            out[e] = out.get(e, 0) + x
        return TruncatedSeries(out, n)

    def __neg__(self):
        return TruncatedSeries({e: -x for e, x in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            q = to_rational(other)
            return TruncatedSeries({e: q * x for e, x in self.coeffs.items()}, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries(_poly_mul(self.coeffs, other.coeffs, n), n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        terms = " + ".join(f"({x})t^{e}" for e, x in sorted(self.coeffs.items())) or "0"
        return f"{terms} + O(t^{self.order})"


class SeriesTuple(tuple):
    """One :class:`TruncatedSeries` per branch, all of the same order."""

    def __new__(cls, components: Iterable[TruncatedSeries]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a series tuple needs at least one branch")
        if len({c.order for c in comps}) != 1:
            raise ValueError("all branches must share one truncation order")
        return super().__new__(cls, comps)

    @property
    def order(self) -> int:
        return self[0].order

    def __mul__(self, other):
        return SeriesTuple(a * b for a, b in zip(self, other))

    def __add__(self, other):
        return SeriesTuple(a + b for a, b in zip(self, other))


def _poly_mul(a: Mapping[int, Fraction], b: Mapping[int, Fraction], order: int) -> Poly:
    out: Poly = {}
    for e1, x1 in a.items():
        if e1 >= order:
            continue
        for e2, x2 in b.items():
            e = e1 + e2
            if e < order:
                out[e] = out.get(e, 0) + x1 * x2
    return {e: x for e, x in out.items() if x}


def _as_poly(component) -> Poly:
    if isinstance(component, TruncatedSeries):
        return dict(component.coeffs)
    if isinstance(component, Mapping):
        return {int(e): to_rational(x) for e, x in component.items() if to_rational(x)}
    raise InvalidParametrization(f"cannot read branch component {component!r}")


class CurveGerm:
    """A reduced curve singularity ``O`` inside ``prod_i k[[t_i]]``.

    ``generators`` is a list of algebra generators; each is a sequence of
    ``branches`` polynomials given as ``{exponent: coefficient}`` mappings or
    :class:`TruncatedSeries`.  Constants are always adjoined.

    Invariants are computed eagerly.  With ``truncation=None`` the window
    size is ``2 * sum(expected_conductor) + 6`` when an expected conductor is
    supplied, and found by doubling otherwise.  Either way the result must be
    identical at ``N`` and ``N + 2``, or :class:`TruncationTooSmall` is raised.
    """

    def __init__(
        self,
        branches: int,
        generators: Sequence[Sequence],
        *,
        name: Optional[str] = None,
        truncation: Optional[int] = None,
        expected_conductor: Optional[Sequence[int]] = None,
    ):
        if branches < 1:
            raise InvalidParametrization("a germ needs at least one branch")
        gens = []
        for g in generators:
            comps = list(g)
            if len(comps) != branches:
                raise InvalidParametrization(
                    f"generator has {len(comps)} components, expected {branches}")
            polys = tuple(_as_poly(c) for c in comps)
            for p in polys:
                if p.get(0):
                    raise InvalidParametrization(
                        "generators must vanish at the singular point (zero constant term)")
            if any(polys):
                gens.append(polys)
        self.branches = branches
        self.generators: Tuple[Tuple[Poly, ...], ...] = tuple(gens)
        self.name = name
        self._closures: Dict[int, EchelonBasis] = {}

        if truncation is not None:
            n = int(truncation)
            if n < 1:
                raise TruncationTooSmall("truncation must be a positive integer")
        elif expected_conductor is not None:
            n = 2 * sum(expected_conductor) + 6
        else:
            n = self._search_truncation()
        self.truncation = n
        self.delta, self.conductor = self._stable_invariants(n)
        self.gorenstein = sum(self.conductor) == 2 * self.delta

    def __repr__(self):
        label = self.name or f"{self.branches}-branch germ"
        return f"CurveGerm({label}, delta={self.delta}, conductor={self.conductor})"

    @property
    def conductor_colength(self) -> int:
        return sum(self.conductor)

    def coordinate(self, branch: int, exponent: int) -> int:
        return exponent * self.branches + branch

    def split(self, coordinate: int) -> Tuple[int, int]:
        """Inverse of :meth:`coordinate`: ``(branch, exponent)``."""
        e, i = divmod(coordinate, self.branches)
        return i, e

    def multiply(self, v: SparseVector, gen: Sequence[Poly], order: int) -> SparseVector:
        """Product of a window vector with a generator, truncated at ``order``."""
        r = self.branches
        out: SparseVector = {}
        for idx, x in v.items():
            e, i = divmod(idx, r)
            for e2, y in gen[i].items():
                e3 = e + e2
                if e3 < order:
                    k = e3 * r + i
                    out[k] = out.get(k, 0) + x * y
        return {k: x for k, x in out.items() if x}

    def closure(self, order: int) -> EchelonBasis:
        """Span of the image of ``O`` in the window of size ``order``."""
        if order in self._closures:
            return self._closures[order]
        basis = EchelonBasis()
        one = {self.coordinate(i, 0): Fraction(1) for i in range(self.branches)}
        basis.add(one)
        queue = [one]
        while queue:
            v = queue.pop()
            for g in self.generators:
                w = self.multiply(v, g, order)
                if w and basis.add(w):
                    queue.append(w)
        self._closures[order] = basis
        return basis

    def maximal_ideal(self, order: int) -> List[SparseVector]:
        """k-basis of the maximal ideal's image in the window.

        The closure is fully reduced with pivots at lowest coordinates, so
        the only vector touching the constants is the one with pivot 0.
        """
        return [v for v in self.closure(order).vectors() if min(v) >= self.branches]

    def _raw_invariants(self, order: int) -> Tuple[int, Tuple[int, ...]]:
        basis = self.closure(order)
        delta = self.branches * order - len(basis)
        cond = []
        for i in range(self.branches):
            c = order
            while c > 0 and {self.coordinate(i, c - 1): 1} in basis:
                c -= 1
            cond.append(c)
        return delta, tuple(cond)

    def _stable_invariants(self, n: int) -> Tuple[int, Tuple[int, ...]]:
        first = self._raw_invariants(n)
        second = self._raw_invariants(n + 2)
        if first != second or any(c >= n for c in first[1]):
            raise TruncationTooSmall(
                f"invariants not stable at truncation {n} "
                f"(delta/conductor {first} vs {second} at {n + 2})")
        return first

    def _search_truncation(self) -> int:
        n = 8
        while n <= MAX_TRUNCATION:
            try:
                _, cond = self._stable_invariants(n)
            except TruncationTooSmall:
                n *= 2
                continue
            return max(n, 2 * sum(cond) + 6)
        raise TruncationTooSmall(
            f"no stable truncation up to {MAX_TRUNCATION}; "
            "the generators may not separate the branches")

    def invariants_at(self, order: int) -> Tuple[int, Tuple[int, ...], bool]:
        """(delta, conductor, gorenstein) recomputed with stability check at ``order``."""
        delta, cond = self._stable_invariants(order)
        return delta, cond, sum(cond) == 2 * delta


def germ_from_semigroup(s: NumericalSemigroup, truncation: Optional[int] = None) -> CurveGerm:
    gens = [({a: 1},) for a in s.generators if a > 0]
    name = "<{}>".format(",".join(map(str, s.generators)))
    germ = CurveGerm(1, gens, name=name, truncation=truncation,
                     expected_conductor=(s.conductor,))
    germ.semigroup = s
    return germ


PRESETS = {
    "smooth": (1, [({1: 1},)], (0,)),
    "node": (2, [({1: 1}, {}), ({}, {1: 1})], (1, 1)),
    "cusp": (1, [({2: 1},), ({3: 1},)], (2,)),
    # branches y = x^2 and y = -x^2 of y^2 = x^4
    "tacnode": (2, [({1: 1}, {1: 1}), ({2: 1}, {2: -1})], (2, 2)),
    "triple_point": (3, [({1: 1}, {}, {}), ({}, {1: 1}, {}), ({}, {}, {1: 1})], (1, 1, 1)),
}


def germ_preset(name: str, truncation: Optional[int] = None) -> CurveGerm:
    try:
        branches, gens, expected = PRESETS[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}") from None
    germ = CurveGerm(branches, gens, name=name, truncation=truncation,
                     expected_conductor=expected)
    if name in ("smooth", "cusp"):
        germ.semigroup = NumericalSemigroup([1] if name == "smooth" else [2, 3])
    return germ


def algebra_closure(g: CurveGerm) -> RatMatrix:
    """Row-reduced basis of ``O`` modulo ``t^N``, one column per window monomial."""
    n = g.truncation
    width = g.branches * n
    rows = []
    for v in g.closure(n).vectors():
        row = [0] * width
        for k, x in v.items():
            row[k] = x
        rows.append(row)
    return RatMatrix(rows, cols=width)


def germ_delta(g: CurveGerm) -> int:
    return g.delta


def germ_conductor(g: CurveGerm) -> List[int]:
    return list(g.conductor)


def germ_is_gorenstein(g: CurveGerm) -> bool:
    return g.gorenstein
