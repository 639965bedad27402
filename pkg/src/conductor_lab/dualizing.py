"""Rosenlicht regular differentials of a curve germ.

A differential on the normalization is stored per branch as a Laurent
polynomial ``{exponent: coefficient}`` standing for ``sum a_n t_i^n dt_i``.
It is regular on the germ when the total residue of ``f * eta`` vanishes
for every ``f`` in the local ring; only the polar part matters for that
test, so regular differentials are determined by their polar parts.

With this residue normalization the monomial ``t^n dt`` on a one-branch
germ with semigroup ``S`` is regular iff ``-1 - n`` is not in ``S``.  The
other common normalization, ``{n : F - n not in S}``, is exposed as
:func:`canonical_ideal`; the two differ by a shift of the conductor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import PolarPartSyntaxError
from .exactla import EchelonBasis, RatMatrix, SparseVector, format_rational, kernel_basis, to_rational
from .localring import CurveGerm
from .semigroup import NumericalSemigroup, sg_pseudo_frobenius


class Differential:
    """Meromorphic differential germ on the normalization, one Laurent
    polynomial per branch."""

    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[Mapping[int, object]]):
        cleaned = []
        for branch in terms:
            d = {}
            for e, x in branch.items():
                q = to_rational(x)
                if q:
                    d[int(e)] = q
            cleaned.append(d)
        if not cleaned:
            raise ValueError("a differential needs at least one branch")
        self.terms: Tuple[Dict[int, Fraction], ...] = tuple(cleaned)

    @property
    def branches(self) -> int:
        return len(self.terms)

    def pole_orders(self) -> Tuple[int, ...]:
        return tuple(max([0] + [-e for e in t if e < 0]) for t in self.terms)

    def polar_part(self) -> "PolarPart":
        return PolarPart([{e: x for e, x in t.items() if e < 0} for t in self.terms])

    def is_zero(self) -> bool:
        return not any(self.terms)

    def __add__(self, other: "Differential") -> "Differential":
        out = [dict(t) for t in self.terms]
        for d, t in zip(out, other.terms):
            for e, x in t.items():
                d[e] = d.get(e, 0) + x
        return type(self)(out) if type(self) is type(other) else Differential(out)

    def scale(self, q) -> "Differential":
        q = to_rational(q)
        return type(self)([{e: q * x for e, x in t.items()} for t in self.terms])

    def __eq__(self, other):
        if not isinstance(other, Differential):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(tuple(sorted(t.items())) for t in self.terms))

    def to_text(self) -> str:
        return format_polar_part(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"


class PolarPart(Differential):
    """A differential with only negative exponents."""

    __slots__ = ()

    def __init__(self, terms):
        super().__init__(terms)
        if any(e >= 0 for t in self.terms for e in t):
            raise ValueError("polar parts only carry negative exponents")


def parse_polar_part(text: str, branches: Optional[int] = None) -> Differential:
    """Parse ``exp:num/den`` lists, branches separated by ``;``.

    ``"-1:1"`` is ``dt/t``; ``"-1:1,-2:3/2;-1:-1"`` has two branches.  An
    empty branch (``"-1:1;"``) is the zero polar part on that branch.  When
    ``branches`` is given, a single-branch text may not be silently padded.
    """
    chunks = text.split(";")
    terms = []
    for chunk in chunks:
        d: Dict[int, Fraction] = {}
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                continue
            if ":" not in item:
                raise PolarPartSyntaxError(f"expected exp:coefficient, got {item!r}")
            e_text, q_text = item.split(":", 1)
            try:
                e = int(e_text)
                q = Fraction(q_text.strip())
            except (ValueError, ZeroDivisionError):
                raise PolarPartSyntaxError(f"cannot read term {item!r}") from None
            d[e] = d.get(e, 0) + q
        terms.append(d)
    if branches is not None and len(terms) != branches:
        raise PolarPartSyntaxError(
            f"differential has {len(terms)} branch(es), the germ has {branches}")
    return Differential(terms)


def format_polar_part(eta: Differential) -> str:
    return ";".join(
        ",".join(f"{e}:{format_rational(x)}" for e, x in sorted(t.items())) for t in eta.terms)


@dataclass(frozen=True)
class CanonicalIdealSet:
    """Exponents ``n`` in ``[lo, hi]`` with ``F - n`` outside the semigroup."""

    lo: int
    hi: int
    exponents: Tuple[int, ...]

    def __contains__(self, n):
        return n in self.exponents

    def __iter__(self):
        return iter(self.exponents)


def canonical_ideal(s: NumericalSemigroup, lo: int, hi: int) -> CanonicalIdealSet:
    if lo > hi:
        raise ValueError("empty window: lo > hi")
    f = s.frobenius
    return CanonicalIdealSet(lo, hi, tuple(n for n in range(lo, hi + 1) if f - n not in s))


def rosenlicht_exponents(s: NumericalSemigroup, lo: int, hi: int) -> List[int]:
    if lo > hi:
        raise ValueError("empty window: lo > hi")
    return [n for n in range(lo, hi + 1) if -1 - n not in s]


def residue_pairing(g: CurveGerm, f: SparseVector, eta: Differential) -> Fraction:
    """Total residue of ``f * eta`` for a window vector ``f`` of the germ."""
    total = Fraction(0)
    for i, t in enumerate(eta.terms):
        for n, a in t.items():
            if n < 0:
                x = f.get(g.coordinate(i, -1 - n))
                if x:
                    total += a * x
    return total


def _polar_columns(g: CurveGerm) -> List[Tuple[int, int]]:
    # (branch, exponent), most polar first
    cols = [(i, -k) for i in range(g.branches) for k in range(1, g.conductor[i] + 1)]
    return sorted(cols, key=lambda c: (c[1], c[0]))


def pairing_matrix(g: CurveGerm) -> Tuple[RatMatrix, List[Tuple[int, int]]]:
    """Residue pairing of the closure basis against the polar window.

    Rows are closure basis vectors of valuation below the largest pole
    order; columns are ``(branch, exponent)`` polar monomials.
    """
    cols = _polar_columns(g)
    top = max(g.conductor) if cols else 0
    rows = []
    for v in g.closure(g.truncation).vectors():
        if min(v) >= g.branches * top:
            continue
        rows.append([v.get(g.coordinate(i, -1 - n), 0) for i, n in cols])
    return RatMatrix(rows, cols=len(cols)), cols


def _normalize(vec: List[Fraction]) -> List[Fraction]:
    lead = next((x for x in vec if x), None)
    return [x / lead for x in vec] if lead else vec


def omega_polar_basis(g: CurveGerm) -> List[PolarPart]:
    """Basis of the polar parts of regular differentials (pole order <= c_i)."""
    m, cols = pairing_matrix(g)
    if not cols:
        return []
    basis = []
    for vec in kernel_basis(m):
        vec = _normalize(vec)
        terms = [dict() for _ in range(g.branches)]
        for (i, n), x in zip(cols, vec):
            if x:
                terms[i][n] = x
        basis.append(PolarPart(terms))
    basis.sort(key=lambda p: sorted((e, i) for i, t in enumerate(p.terms) for e in t))
    return basis


def descent_test(g: CurveGerm, eta: Differential) -> bool:
    """True iff ``eta`` is a regular (Rosenlicht) differential on the germ."""
    if eta.branches != g.branches:
        raise ValueError(f"differential has {eta.branches} branches, germ has {g.branches}")
    order = max((g.truncation,) + eta.pole_orders())
    return all(residue_pairing(g, f, eta) == 0 for f in g.closure(order).vectors())


def conductor_level_test(g: CurveGerm, eta: Differential) -> bool:
    """True iff the conductor kills every pole of ``eta``."""
    if eta.branches != g.branches:
        raise ValueError(f"differential has {eta.branches} branches, germ has {g.branches}")
    return all(p <= c for p, c in zip(eta.pole_orders(), g.conductor))


@dataclass
class DualizingBasis:
    polar_basis: List[PolarPart]
    min_generators: List[Differential]
    cm_type: int
    generator_exponents: Optional[List[int]] = None
    window: Tuple[int, int] = (0, 0)


def _window_vectors(g: CurveGerm, polar: List[PolarPart], hi: int):
    """omega inside the exponent window ``[-c_max, hi)``, as sparse vectors."""
    r = g.branches
    shift = max(g.conductor)

    def coord(i, n):
        return (n + shift) * r + i

    vecs = []
    for p in polar:
        vecs.append({coord(i, n): x for i, t in enumerate(p.terms) for n, x in t.items()})
    for n in range(0, hi):
        for i in range(r):
            vecs.append({coord(i, n): Fraction(1)})
    return vecs, coord, shift


def omega_min_generators(g: CurveGerm, polar: Optional[List[PolarPart]] = None) -> DualizingBasis:
    """Minimal generators of omega, counted as ``dim omega / m omega``.

    Computed on the window ``[-c_max, 2 c_max]``; everything at or above the
    conductor already lies in ``m omega``.
    """
    if polar is None:
        polar = omega_polar_basis(g)
    r = g.branches
    cmax = max(g.conductor)
    hi = 2 * cmax + 1 if cmax else 1
    vecs, coord, shift = _window_vectors(g, polar, hi)

    span = EchelonBasis()
    for x in g.generators:
        for v in vecs:
            prod = {}
            for k, a in v.items():
                e, i = divmod(k, r)
                n = e - shift
                for e2, b in x[i].items():
                    if n + e2 < hi:
                        kk = coord(i, n + e2)
                        prod[kk] = prod.get(kk, 0) + a * b
            prod = {k: a for k, a in prod.items() if a}
            if prod:
                span.add(prod)

    gens = []
    for v in vecs:
        if span.add(v):
            terms = [dict() for _ in range(r)]
            for k, a in v.items():
                e, i = divmod(k, r)
                terms[i][e - shift] = a
            gens.append(Differential(terms))

    exps = None
    semigroup = getattr(g, "semigroup", None)
    if semigroup is not None:
        exps = generator_exponents(semigroup)
    return DualizingBasis(polar, gens, len(gens), exps, (-cmax, hi - 1))


def generator_exponents(s: NumericalSemigroup) -> List[int]:
    """Closed form for monomial germs: ``-1 - f`` over pseudo-Frobenius ``f``."""
    if s.conductor == 0:
        return [0]
    return sorted(-1 - f for f in sg_pseudo_frobenius(s))


def cm_type(g: CurveGerm) -> int:
    return omega_min_generators(g).cm_type


def omega_exponent_support(g: CurveGerm, lo: int, hi: int) -> List[int]:
    """Exponents ``n`` in ``[lo, hi]`` with ``t^n dt`` regular (one branch)."""
    if g.branches != 1:
        raise ValueError("monomial support is only meaningful for one branch")
    span = EchelonBasis()
    for p in omega_polar_basis(g):
        span.add({-n: x for n, x in p.terms[0].items()})
    out = []
    for n in range(lo, hi + 1):
        if n >= 0 or {-n: 1} in span:
            out.append(n)
    return out
