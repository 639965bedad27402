"""Registry of worked examples, with computed values beside claimed ones.

Claims are data: each carries the claimed value, an anchor naming where it
is made, and a short verbatim quote.  Computed values come only from the
engine.  A disagreement is a row with ``agrees = False``, never an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .defect import global_defect, local_defect
from .errors import InternalInconsistency
from .dualizing import conductor_level_test, descent_test, omega_min_generators, parse_polar_part
from .exactla import format_rational
from .formulas import cyclic_quotient_gorenstein, ribbon_ext_dim, ribbon_local_defect
from .localring import CurveGerm, germ_from_semigroup, germ_preset
from .nodal import (
    banana,
    dual_graph,
    irreducible_rational,
    nodal_h0_omega,
    normalization_residue_rank,
    residue_rank,
    full_selection,
    sequence_bookkeeping,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Claim:
    invariant: str
    value: object
    anchor: str
    quote: str

    @property
    def citation(self) -> str:
        return f'{self.anchor}: "{self.quote}"'


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # semigroup | preset | nodal | formula | global
    params: tuple
    claims: Tuple[Claim, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Row:
    entry: str
    invariant: str
    computed: object
    claimed: object
    citation: str
    agrees: Optional[bool]

    def to_json(self) -> dict:
        return {
            "entry": self.entry,
            "invariant": self.invariant,
            "computed": jsonable(self.computed),
            "claimed": jsonable(self.claimed),
            "citation": self.citation,
            "agrees": self.agrees,
        }


def jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _c(invariant, value, anchor, quote):
    return Claim(invariant, value, anchor, quote)


CASE1 = "Case 1: Nodes"
CASE2 = "Case 2: Cusps"
CASE3 = "Case 3: Tacnodes"
GLOBAL = "Global Codimension Formula"
EX1 = "Example 1: Non-planar monomial space curves"
EX2 = "Example 2: Ribbon"
EX3 = "Example 3: Triple-point space curve"
NONDESCENT = "Explicit Computation of Non-Descent of dt/t"
MONO1 = "Further Explicit Computations, Example 1 (k[t^4,t^6,t^9])"
MONO2 = "Further Explicit Computations, Example 2 (k[t^5,t^7,t^9])"
APPA = "Appendix A"
APPB = "Appendix B"
TABLE = "Appendix B, Unified Comparison table"
SPAN = "Scheme-theoretic residue span theorem"
QUOT = "Non-Gorenstein cyclic quotient singularities"


def _nodal_claims(delta: int) -> Tuple[Claim, ...]:
    book = sequence_bookkeeping(0, delta)
    return (
        _c("h0_omega", book.claimed_h0, SPAN, r"= g - (\delta - 1)."),
        _c("residue_image_dim", book.claimed_res_rank, SPAN,
           r"\dim_k \operatorname{Im}(\mathrm{Res}) = \delta - 1."),
        _c("residue_span_full", True, SPAN, "span the zero-dimensional dual"),
    )


def catalog_entries() -> List[CatalogEntry]:
    return [
        CatalogEntry("smooth", "preset", ("smooth",), (
            _c("type_defect", 0, GLOBAL, "curves with only Gorenstein singularities"),
            _c("gorenstein", True, GLOBAL, "curves with only Gorenstein singularities"),
        )),
        CatalogEntry("node", "preset", ("node",), (
            _c("type_defect", 0, CASE1, "Nodes never contribute to the degeneracy"),
            _c("conductor", [1, 1], CASE1, "The conductor is the maximal ideal"),
            _c("type_defect", 0, TABLE, "Node & smooth (2 points)"),
        )),
        CatalogEntry("cusp", "preset", ("cusp",), (
            _c("type_defect", 0, CASE2, "Cusps satisfy maximal variation"),
            _c("conductor", [2], CASE2, "The conductor is $(t^2)$,"),
            _c("delta", 1, APPB, "the delta invariant of a cusp"),
        )),
        CatalogEntry("tacnode", "preset", ("tacnode",), (
            _c("type_defect", 0, CASE3, "conductor-level balancing captures all constraints"),
            _c("type_defect", 2, TABLE, "Tacnode & smooth (2 points)"),
            _c("conductor", [4, 4], CASE3, r"The conductor is $(t^4)\oplus(s^4)$,"),
            _c("delta", 2, APPB, r"The tacnode has $\delta = 2$,"),
        )),
        CatalogEntry("triple_point", "preset", ("triple_point",), (
            _c("type_defect", 2, EX3, "A direct computation shows"),
            _c("cm_type", 2, EX3, "requires two generators"),
            _c("gorenstein", False, EX3, "hence it is not invertible"),
            _c("conductor", [1, 1, 1], EX3, r"mapping to $(u)\oplus(v)\oplus(w)$."),
        )),
        CatalogEntry("<3,4,5>", "semigroup", (3, 4, 5), (
            _c("conductor", [3], NONDESCENT, r"\mathfrak{c} = (t^3)."),
            _c("gorenstein", False, APPA, "and hence not Gorenstein."),
            _c("type_defect", 1, APPA, "exactly one additional linear constraint"),
            _c("descends(dt/t)", False, NONDESCENT, r"does \emph{not} descend to"),
            _c("conductor_level(dt/t)", True, NONDESCENT, r"passes the \emph{conductor-level test}."),
            _c("omega_generators", [-2, -1], NONDESCENT,
               r"\left\langle t^{-2}dt,\; t^{-1}dt \right\rangle_A."),
        )),
        CatalogEntry("<4,5,6>", "semigroup", (4, 5, 6), (
            _c("conductor", [8], EX1, r"\mathfrak c_x = (t^8)"),
            _c("gorenstein", False, EX1, "Thus $(X,x)$ is non-Gorenstein."),
            _c("type_defect", 1, EX1, r"\epsilon(x) = 1."),
        )),
        CatalogEntry("<4,6,9>", "semigroup", (4, 6, 9), (
            _c("gaps", [1, 2, 3, 5, 7, 11], MONO1, r"The gaps are $\{1,2,3,5,7,11\}$."),
            _c("conductor", [12], MONO1, "So, in our example $c=12$."),
            _c("gorenstein", False, MONO1, "Computations for Non-Gorenstein Monomial Curves."),
            _c("type_defect", 2, MONO1, r"neither $t^{-1}dt$ nor $t^{-2}dt$ lies in"),
        )),
        CatalogEntry("<5,7,9>", "semigroup", (5, 7, 9), (
            _c("gaps", [1, 2, 3, 4, 6, 8, 11, 13], MONO2, r"The gaps are $\{1,2,3,4,6,8,11,13\}$."),
            _c("conductor", [14], MONO2, r"\Gamma=\langle 5,7,9\rangle, \qquad c=14."),
            _c("type_defect", 3, MONO2, "Thus three extra constraints appear."),
        )),
        CatalogEntry("ribbon", "formula", ("ribbon",), (
            _c("type_defect", 1, EX2, "At each point,"),
            _c("type_defect", 1, TABLE, "Ribbon & smooth curve"),
            _c("split_type_defect", 0, EX2, "unless the ribbon splits trivially"),
            _c("ribbon_moduli_dim(g=2)", 3, APPB, r"\dim H^1(C,\omega_C^{-1}) = 3g - 3."),
        )),
        CatalogEntry("quotient(3;1,1,2)", "formula", ("quotient", 3, 1, 2), (
            _c("gorenstein", False, QUOT, r"$\mathbb Q$-Gorenstein but not Gorenstein."),
            _c("defect", 2, QUOT, r"\mathrm{defect}(x) = r - 1."),
        )),
        CatalogEntry("node+cusp+tacnode", "global", ("node", "cusp", "tacnode"), (
            _c("total_defect", 0, GLOBAL, r"(nodes, cusps, tacnodes), then $\operatorname{codim}(\Delta)=0$."),
        )),
        CatalogEntry("banana", "nodal", ("banana",), _nodal_claims(2)),
        CatalogEntry("rational_1_node", "nodal", ("irreducible", 1), _nodal_claims(1)),
        CatalogEntry("rational_2_nodes", "nodal", ("irreducible", 2), _nodal_claims(2)),
        CatalogEntry("rational_3_nodes", "nodal", ("irreducible", 3), _nodal_claims(3)),
    ]


def _germ_values(g: CurveGerm) -> Dict[str, object]:
    rep = local_defect(g)
    out = {
        "delta": g.delta,
        "conductor": list(g.conductor),
        "conductor_colength": g.conductor_colength,
        "gorenstein": g.gorenstein,
        "cm_type": rep.cm_type,
        "type_defect": rep.type_defect,
        "conductor_gap_defect": rep.conductor_gap_defect,
    }
    if g.branches == 1:
        dual = omega_min_generators(g)
        window_exps = sorted(min(t) for t in (d.terms[0] for d in dual.min_generators))
        if dual.generator_exponents is not None and window_exps != dual.generator_exponents:
            raise InternalInconsistency(
                f"{g.name}: window generators {window_exps} vs closed form {dual.generator_exponents}")
        out["omega_generators"] = window_exps
        eta = parse_polar_part("-1:1")
        out["descends(dt/t)"] = descent_test(g, eta)
        out["conductor_level(dt/t)"] = conductor_level_test(g, eta)
    return out


def analyze(entry: CatalogEntry, truncation: Optional[int] = None) -> Dict[str, object]:
    """Engine values for every invariant the entry can report."""
    if entry.kind == "semigroup":
        s = NumericalSemigroup(entry.params)
        values = _germ_values(germ_from_semigroup(s, truncation))
        values["gaps"] = list(s.gaps)
        return values
    if entry.kind == "preset":
        return _germ_values(germ_preset(entry.params[0], truncation))
    if entry.kind == "global":
        reports = [local_defect(germ_preset(p, truncation)) for p in entry.params]
        return {"total_defect": global_defect(reports).total_defect}
    if entry.kind == "nodal":
        x = banana() if entry.params[0] == "banana" else irreducible_rational(entry.params[1])
        graph = dual_graph(x)
        norm_rank = normalization_residue_rank(x)
        return {
            "h0_omega": nodal_h0_omega(x),
            "cycle_rank": graph.cycle_rank,
            "residue_rank": residue_rank(x, full_selection(x)),
            "residue_image_dim": norm_rank,
            # rational normalization: the dual of its H^0(omega) is zero-dimensional
            "residue_span_full": norm_rank == 0,
        }
    if entry.kind == "formula":
        if entry.params[0] == "ribbon":
            return {
                "type_defect": ribbon_local_defect(),
                "split_type_defect": ribbon_local_defect(split=True),
                "ribbon_moduli_dim(g=2)": ribbon_ext_dim(2, 2 - 2 * 2),
            }
        if entry.params[0] == "quotient":
            v = cyclic_quotient_gorenstein(*entry.params[1:])
            # the asserted defect has no independent oracle
            return {"gorenstein": v.gorenstein, "defect": None}
    raise ValueError(f"cannot analyze catalog entry {entry.name!r}")


def _same(computed, claimed) -> bool:
    if isinstance(computed, (list, tuple)) and isinstance(claimed, (list, tuple)):
        return list(computed) == list(claimed)
    if isinstance(computed, bool) or isinstance(claimed, bool):
        return computed is claimed
    return computed == claimed


def catalog_rows(truncation: Optional[int] = None, entries=None) -> List[Row]:
    rows = []
    for entry in entries if entries is not None else catalog_entries():
        try:
            values = analyze(entry, truncation)
        except Exception as exc:
            exc.args = (f"{entry.name}: {exc}",) + exc.args[1:]
            raise
        for claim in entry.claims:
            computed = values.get(claim.invariant)
            agrees = None if computed is None else _same(computed, claim.value)
            rows.append(Row(entry.name, claim.invariant, computed, claim.value,
                            claim.citation, agrees))
    return rows


def _cell(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_cell(v) for v in value) + "]"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def catalog_report(fmt: str = "table", truncation: Optional[int] = None) -> str:
    rows = catalog_rows(truncation)
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=2, ensure_ascii=False) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    header = ("entry", "invariant", "computed", "claimed", "agrees", "citation")
    cells = [header] + [
        (r.entry, r.invariant, _cell(r.computed), _cell(r.claimed),
         {True: "agree", False: "DISAGREE", None: "n/a"}[r.agrees], r.citation)
        for r in rows
    ]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header) - 1)]
    lines = []
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[-1])
    lines.insert(1, "  ".join("-" * w for w in widths) + "  " + "-" * len("citation"))
    n_dis = sum(r.agrees is False for r in rows)
    lines.append("")
    lines.append(f"{len(rows)} claims, {n_dis} disagreements")
    return "\n".join(lines) + "\n"
