"""Canonical differentials on nodal curves with rational components.

On a rational component a differential with at most simple poles at the
marked points ``p_j`` is ``sum r_j dz/(z - p_j)``; it is regular at infinity
iff the residues sum to zero.  It descends to the nodal curve iff the two
residues at every node cancel.  Everything below is linear algebra on the
vector of residues, one unknown per marked point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from .errors import MalformedCurve
from .exactla import RatMatrix, kernel_basis, rank, to_rational

PointRef = Tuple[str, int]


@dataclass(frozen=True)
class Component:
    label: str
    points: Tuple[Fraction, ...]


class NodalCurve:
    """Rational components glued at pairs of marked points."""

    def __init__(self, components: Sequence[Component], nodes: Sequence[Tuple[PointRef, PointRef]]):
        self.components = tuple(components)
        self.nodes = tuple((tuple(a), tuple(b)) for a, b in nodes)
        self._validate()
        self._index: Dict[PointRef, int] = {}
        for comp in self.components:
            for j in range(len(comp.points)):
                self._index[(comp.label, j)] = len(self._index)

    def _validate(self):
        if not self.components:
            raise MalformedCurve("curve has no components")
        labels = [c.label for c in self.components]
        if len(set(labels)) != len(labels):
            raise MalformedCurve("component labels must be unique")
        by_label = {c.label: c for c in self.components}
        for c in self.components:
            if len(set(c.points)) != len(c.points):
                raise MalformedCurve(f"coincident marked points on component {c.label!r}")
        used = set()
        for a, b in self.nodes:
            if a == b:
                raise MalformedCurve(f"node glues point {a} to itself")
            for ref in (a, b):
                label, j = ref
                if label not in by_label or not 0 <= j < len(by_label[label].points):
                    raise MalformedCurve(f"node refers to missing point {ref}")
                if ref in used:
                    raise MalformedCurve(f"marked point {ref} is used by two nodes")
                used.add(ref)
        for c in self.components:
            for j in range(len(c.points)):
                if (c.label, j) not in used:
                    raise MalformedCurve(f"marked point {(c.label, j)} is not on any node")

    @property
    def unknowns(self) -> int:
        return len(self._index)

    def point_index(self, ref: PointRef) -> int:
        return self._index[tuple(ref)]

    def constraint_matrix(self) -> RatMatrix:
        """Node balancing rows, then one residue-theorem row per component."""
        n = self.unknowns
        rows = []
        for a, b in self.nodes:
            row = [0] * n
            row[self._index[a]] += 1
            row[self._index[b]] += 1
            rows.append(row)
        for c in self.components:
            row = [0] * n
            for j in range(len(c.points)):
                row[self._index[(c.label, j)]] = 1
            rows.append(row)
        return RatMatrix(rows, cols=n)

    def differentials(self) -> List[List[Fraction]]:
        """Basis of ``H^0(omega)`` as residue vectors."""
        if self.unknowns == 0:
            return []
        return kernel_basis(self.constraint_matrix())

    def scaled(self, factor) -> "NodalCurve":
        q = to_rational(factor)
        if q == 0:
            raise ValueError("scaling factor must be nonzero")
        comps = [Component(c.label, tuple(q * p for p in c.points)) for c in self.components]
        return NodalCurve(comps, self.nodes)


def _read_point(text) -> Fraction:
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        raise MalformedCurve(
            "marked points at infinity are not supported; apply a Mobius change of "
            "coordinate that moves them to finite points")
    try:
        return to_rational(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise MalformedCurve(f"cannot read point coordinate {text!r}") from None


def nodal_curve_from_json(data: Union[dict, str, Path]) -> NodalCurve:
    """Build a curve from the JSON layout or a path to such a file."""
    if isinstance(data, (str, Path)):
        data = json.loads(Path(data).read_text())
    try:
        comps = [Component(str(c["label"]), tuple(_read_point(p) for p in c.get("points", [])))
                 for c in data["components"]]
        nodes = [((str(a[0]), int(a[1])), (str(b[0]), int(b[1]))) for a, b in data["nodes"]]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, MalformedCurve):
            raise
        raise MalformedCurve(f"bad nodal curve description: {exc}") from None
    return NodalCurve(comps, nodes)


def nodal_curve_to_json(x: NodalCurve) -> dict:
    return {
        "components": [{"label": c.label, "points": [f"{p.numerator}/{p.denominator}" for p in c.points]}
                       for c in x.components],
        "nodes": [[list(a), list(b)] for a, b in x.nodes],
    }


def nodal_h0_omega(x: NodalCurve) -> int:
    if x.unknowns == 0:
        return 0
    return x.unknowns - rank(x.constraint_matrix())


def residue_rank(x: NodalCurve, selection: Sequence[Tuple[int, int]]) -> int:
    """Rank of ``eta -> Res`` at the chosen preimages.

    ``selection`` holds ``(node_index, end)`` pairs with ``end`` in {0, 1}.
    """
    refs = []
    for node, end in selection:
        if not 0 <= node < len(x.nodes) or end not in (0, 1):
            raise MalformedCurve(f"bad node selection {(node, end)}")
        refs.append(x.nodes[node][end])
    basis = x.differentials()
    if not basis or not refs:
        return 0
    rows = [[v[x.point_index(ref)] for v in basis] for ref in refs]
    return rank(RatMatrix(rows))


def full_selection(x: NodalCurve) -> List[Tuple[int, int]]:
    return [(k, 0) for k in range(len(x.nodes))]


def normalization_residue_rank(x: NodalCurve) -> int:
    """Rank of the residue map on differentials regular on the normalization.

    Those are the residue vectors that vanish identically, so on rational
    components the map is zero; computed rather than assumed.
    """
    n = x.unknowns
    if n == 0:
        return 0
    rows = [list(r) for r in x.constraint_matrix().entries[len(x.nodes):]]
    rows += [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    holo = kernel_basis(RatMatrix(rows, cols=n))
    if not holo:
        return 0
    return rank(RatMatrix([[v[x.point_index(a)] for v in holo] for a, _ in x.nodes]))


@dataclass(frozen=True)
class DualGraph:
    vertices: int
    edges: int
    components: int
    connected: bool
    cycle_rank: int


def dual_graph(x: NodalCurve) -> DualGraph:
    labels = [c.label for c in x.components]
    parent = {l: l for l in labels}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (la, _), (lb, _) in x.nodes:
        ra, rb = find(la), find(lb)
        if ra != rb:
            parent[ra] = rb
    comps = len({find(l) for l in labels})
    v, e = len(labels), len(x.nodes)
    return DualGraph(v, e, comps, comps == 1, e - v + comps)


@dataclass(frozen=True)
class Bookkeeping:
    """The displayed exact-sequence arithmetic, unclamped."""

    genus: int
    delta: int
    claimed_res_rank: int
    claimed_h0: int

    @property
    def res_rank_negative(self) -> bool:
        return self.claimed_res_rank < 0

    @property
    def h0_negative(self) -> bool:
        return self.claimed_h0 < 0


def sequence_bookkeeping(g: int, delta: int) -> Bookkeeping:
    if g < 0 or delta < 0:
        raise ValueError("genus and delta must be non-negative")
    return Bookkeeping(g, delta, delta - 1, g - delta + 1)


def banana() -> NodalCurve:
    """Two lines meeting in two points."""
    comps = [Component("A", (Fraction(0), Fraction(1))), Component("B", (Fraction(0), Fraction(1)))]
    return NodalCurve(comps, [(("A", 0), ("B", 0)), (("A", 1), ("B", 1))])


def irreducible_rational(delta: int) -> NodalCurve:
    """A line with ``delta`` pairs of points identified."""
    pts = tuple(Fraction(k) for k in range(2 * delta))
    nodes = [(("C", 2 * k), ("C", 2 * k + 1)) for k in range(delta)]
    return NodalCurve([Component("C", pts)], nodes)


def chain(length: int) -> NodalCurve:
    """A tree: ``length`` lines in a row, consecutive ones meeting once."""
    comps = []
    for k in range(length):
        pts = []
        if k > 0:
            pts.append(Fraction(0))
        if k < length - 1:
            pts.append(Fraction(1))
        comps.append(Component(f"L{k}", tuple(pts)))
    nodes = []
    for k in range(length - 1):
        nodes.append(((f"L{k}", len(comps[k].points) - 1), (f"L{k + 1}", 0)))
    return NodalCurve(comps, nodes)
