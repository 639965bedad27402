"""Command-line front end.

Exit status: 0 on success, 1 on a usage error, 2 on an engine error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from .catalog import catalog_report, jsonable
from .defect import classify, global_defect, local_defect
from .dualizing import (
    conductor_level_test,
    descent_test,
    format_polar_part,
    omega_min_generators,
    omega_polar_basis,
    parse_polar_part,
)
from .errors import ConductorLabError
from .formulas import KINDS, cyclic_quotient_gorenstein, ribbon_ext_dim, rr_dims
from .localring import PRESETS, CurveGerm, germ_from_semigroup, germ_preset
from .nodal import dual_graph, nodal_curve_from_json, nodal_h0_omega, residue_rank
from .semigroup import NumericalSemigroup, sg_pseudo_frobenius, sg_type

ENV_TRUNCATION = "CONDUCTOR_LAB_TRUNCATION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--truncation", type=_positive, default=None,
                        help=f"window size N (default: automatic, or ${ENV_TRUNCATION})")

    p = _Parser(prog="conductor-lab", description="Curve-singularity invariants in exact arithmetic.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("semigroup", parents=[common], help="numerical semigroup invariants")
    s.add_argument("generators", nargs="+", type=int)

    def germ_args(sp):
        sp.add_argument("preset", nargs="?", help=f"one of: {', '.join(sorted(PRESETS))}")
        sp.add_argument("--semigroup", nargs="+", type=int, metavar="GEN")

    g = sub.add_parser("germ", parents=[common], help="delta, conductor, Gorenstein test")
    germ_args(g)
    d = sub.add_parser("dualizing", parents=[common], help="regular differentials")
    germ_args(d)
    e = sub.add_parser("descent", parents=[common], help="descent of a polar part")
    germ_args(e)
    e.add_argument("--eta", required=True, help="polar part, e.g. '-1:1' or '-1:1;-1:-1'")

    f = sub.add_parser("defect", parents=[common], help="local and global defects")
    f.add_argument("germs", nargs="*", help="preset names or comma-separated generators like 3,4,5")
    f.add_argument("--semigroup", nargs="+", type=int, metavar="GEN")

    n = sub.add_parser("nodal", parents=[common], help="rational nodal curve from a JSON file")
    n.add_argument("file")
    n.add_argument("--select", nargs="*", default=None, metavar="NODE:END",
                   help="node preimages for the residue rank (default: one per node)")

    fm = sub.add_parser("formulas", help="closed-form dimension counts")
    fsub = fm.add_subparsers(dest="formula", parser_class=_Parser)
    fsub.required = True
    rr = fsub.add_parser("rr", parents=[common])
    rr.add_argument("--genus", type=int, required=True)
    rr.add_argument("--degree", type=int, default=None)
    rr.add_argument("--kind", choices=KINDS, default="general")
    rb = fsub.add_parser("ribbon", parents=[common])
    rb.add_argument("--genus", type=int, required=True)
    rb.add_argument("--deg-ideal", type=int, default=None, help="default: 2 - 2g")
    q = fsub.add_parser("quotient", parents=[common])
    q.add_argument("r", type=_positive)
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)

    c = sub.add_parser("catalog", help="worked examples against claimed values")
    csub = c.add_subparsers(dest="action", parser_class=_Parser)
    csub.required = True
    cr = csub.add_parser("report")
    cr.add_argument("--format", choices=("table", "human", "json"), default="table")
    cr.add_argument("--truncation", type=_positive, default=None)
    return p


def _truncation(args) -> Optional[int]:
    if args.truncation is not None:
        return args.truncation
    raw = os.environ.get(ENV_TRUNCATION)
    if raw:
        try:
            return _positive(raw)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"{ENV_TRUNCATION}: {exc}") from None
    return None


def _germ_from_token(token: str, truncation) -> CurveGerm:
    if token in PRESETS:
        return germ_preset(token, truncation)
    try:
        gens = [int(x) for x in token.strip("<>").split(",") if x]
    except ValueError:
        raise UsageError(f"argument {token!r}: not a preset or a generator list") from None
    if not gens:
        raise UsageError(f"argument {token!r}: not a preset or a generator list")
    return germ_from_semigroup(NumericalSemigroup(gens), truncation)


def _germ(args) -> CurveGerm:
    t = _truncation(args)
    if args.semigroup and args.preset:
        raise UsageError("give either a preset or --semigroup, not both")
    if args.semigroup:
        return germ_from_semigroup(NumericalSemigroup(args.semigroup), t)
    if not args.preset:
        raise UsageError("a germ is required: a preset name or --semigroup GEN...")
    if args.preset not in PRESETS:
        raise UsageError(f"argument preset: unknown preset {args.preset!r}")
    return germ_preset(args.preset, t)


def _emit(data: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(jsonable_tree(data), indent=2) + "\n")
        return
    for key, value in data.items():
        out.write(f"{key}: {_human(value)}\n")


def jsonable_tree(value):
    if isinstance(value, dict):
        return {k: jsonable_tree(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable_tree(v) for v in value]
    return jsonable(value)


def _human(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "undetermined"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_human(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_human(v) for v in value) + "]"
    return str(value)


def cmd_semigroup(args, out):
    s = NumericalSemigroup(args.generators)
    _emit({
        "generators": list(s.generators),
        "gaps": list(s.gaps),
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "delta": s.delta,
        "pseudo_frobenius": sg_pseudo_frobenius(s),
        "type": sg_type(s),
        "symmetric": s.is_symmetric(),
    }, args.format, out)


def _germ_summary(g: CurveGerm) -> dict:
    return {
        "germ": g.name,
        "branches": g.branches,
        "truncation": g.truncation,
        "delta": g.delta,
        "conductor": list(g.conductor),
        "conductor_colength": g.conductor_colength,
        "gorenstein": g.gorenstein,
    }


def cmd_germ(args, out):
    _emit(_germ_summary(_germ(args)), args.format, out)


def cmd_dualizing(args, out):
    g = _germ(args)
    polar = omega_polar_basis(g)
    dual = omega_min_generators(g, polar)
    data = _germ_summary(g)
    data.update({
        "polar_basis": [format_polar_part(p) for p in polar],
        "min_generators": [format_polar_part(d) for d in dual.min_generators],
        "cm_type": dual.cm_type,
    })
    if dual.generator_exponents is not None:
        data["generator_exponents"] = dual.generator_exponents
    _emit(data, args.format, out)


def cmd_descent(args, out):
    g = _germ(args)
    try:
        eta = parse_polar_part(args.eta, g.branches)
    except ConductorLabError as exc:
        raise UsageError(f"argument --eta: {exc}") from None
    level = conductor_level_test(g, eta)
    full = descent_test(g, eta)
    _emit({
        "germ": g.name,
        "eta": format_polar_part(eta),
        "conductor_level": "pass" if level else "fail",
        "descent": "pass" if full else "fail",
    }, args.format, out)


def cmd_defect(args, out):
    t = _truncation(args)
    germs = [_germ_from_token(tok, t) for tok in args.germs]
    if args.semigroup:
        germs.append(germ_from_semigroup(NumericalSemigroup(args.semigroup), t))
    reports = []
    for g in germs:
        rep = local_defect(g)
        classify(g, rep)
        reports.append(rep)
    glob = global_defect(reports)
    if args.format == "json":
        _emit(glob.to_json(), "json", out)
        return
    for rep in reports:
        out.write(f"{rep.germ}: delta={rep.delta} colength={rep.conductor_colength} "
                  f"gorenstein={_human(rep.gorenstein)} cm_type={rep.cm_type} "
                  f"type_defect={rep.type_defect} conductor_gap_defect={rep.conductor_gap_defect}\n")
    out.write(f"total: {glob.total_defect}\ncodim: {glob.codim_delta}\n"
              f"strata: {_human(glob.strata)}\n")


def _selection(tokens: Optional[Sequence[str]], nodes: int) -> List[tuple]:
    if tokens is None:
        return [(k, 0) for k in range(nodes)]
    sel = []
    for tok in tokens:
        try:
            node, end = tok.split(":")
            sel.append((int(node), int(end)))
        except ValueError:
            raise UsageError(f"argument --select: expected NODE:END, got {tok!r}") from None
    return sel


def cmd_nodal(args, out):
    try:
        x = nodal_curve_from_json(args.file)
    except OSError as exc:
        raise UsageError(f"argument file: {exc.strerror}: {args.file}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"argument file: invalid JSON ({exc.msg})") from None
    graph = dual_graph(x)
    sel = _selection(args.select, len(x.nodes))
    _emit({
        "h0_omega": nodal_h0_omega(x),
        "dual_graph": {"V": graph.vertices, "E": graph.edges,
                       "connected": graph.connected, "cycle_rank": graph.cycle_rank},
        "selection": [f"{n}:{e}" for n, e in sel],
        "residue_rank": residue_rank(x, sel),
    }, args.format, out)


def cmd_formulas(args, out):
    try:
        if args.formula == "rr":
            r = rr_dims(args.genus, args.degree, args.kind)
            data = {"genus": r.genus, "degree": r.degree, "kind": args.kind, "h0": r.h0, "h1": r.h1}
        elif args.formula == "ribbon":
            deg = 2 - 2 * args.genus if args.deg_ideal is None else args.deg_ideal
            data = {"genus": args.genus, "deg_ideal": deg, "h1_ideal": ribbon_ext_dim(args.genus, deg)}
        else:
            v = cyclic_quotient_gorenstein(args.r, args.a, args.b)
            data = {"r": v.r, "weights": list(v.weights), "gorenstein": v.gorenstein,
                    "claimed_defect": v.claimed_defect, "isolated": v.isolated}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        data = {k: ("undetermined" if v is None else v) for k, v in data.items()}
    _emit(data, args.format, out)


def cmd_catalog(args, out):
    fmt = "table" if args.format == "human" else args.format
    out.write(catalog_report(fmt, _truncation(args)))


COMMANDS = {
    "semigroup": cmd_semigroup,
    "germ": cmd_germ,
    "dualizing": cmd_dualizing,
    "descent": cmd_descent,
    "defect": cmd_defect,
    "nodal": cmd_nodal,
    "formulas": cmd_formulas,
    "catalog": cmd_catalog,
}


def _glue_eta(argv: List[str]) -> List[str]:
    # "-1:1" would otherwise be parsed as an option flag
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--eta" and i + 1 < len(argv):
            out.append("--eta=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_eta(argv))
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ConductorLabError as exc:
        err.write(f"error[{exc.code}]: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
