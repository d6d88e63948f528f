"""Command-line interface tying the analysis modules together."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import basins as basins_mod
from . import diagrams as diag_mod
from . import report as report_mod
from .attractors import (
    Attractor, attractors, import_attractors, load_attractor_seeds)
from .ctl import CtlError, accept, parse_ctl, render_ctl
from .dd import ExprStyle, node_limit_from_env
from .model import BnetError, detect_van_ham_pairs, parse_bnet, render_expr
from .stg import UpdateMode, build

_STYLES = {"dnf": ExprStyle.DNF_STATES,
           "factored": ExprStyle.FACTORED,
           "isop": ExprStyle.ISOP}


class DomainError(Exception):
    pass


def _write(path: str | None, text: str):
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit_json(args, payload):
    _write(args.json, json.dumps(payload, indent=2) + "\n")


def _load_network(args):
    try:
        text = Path(args.bnet).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {args.bnet}: {exc}") from exc
    try:
        net = parse_bnet(text)
    except BnetError as exc:
        raise DomainError(f"{args.bnet}: {exc}") from exc
    return detect_van_ham_pairs(net)


def _build_ts(args):
    net = _load_network(args)
    mode = UpdateMode.ASYNC if args.update == "async" else UpdateMode.SYNC
    return build(net, mode, node_limit_from_env())


def _get_attractors(ts, args):
    """Detected attractors, or imported ones when --attractor-file is given;
    returns (attractors, partial flag)."""
    if args.attractor_file:
        try:
            seeds = load_attractor_seeds(
                Path(args.attractor_file).read_text())
            return import_attractors(ts, seeds), True
        except (OSError, ValueError) as exc:
            raise DomainError(str(exc)) from exc
    return attractors(ts), False


def _attractor_payload(a: Attractor) -> dict:
    payload = {
        "index": a.index,
        "representative": a.representative,
        "kind": a.kind.value,
        "size": a.states.count(),
    }
    if a.unverified:
        payload["unverified"] = True
    return payload


def _markers(args, ts):
    markers = [mk.strip() for mk in args.markers.split(",") if mk.strip()]
    if not markers:
        raise DomainError("--markers must name at least one variable")
    for mk in markers:
        if ts.net.variables.index_of(mk) is None:
            raise DomainError(f"unknown marker {mk!r}")
    return markers


def _node_expressions(ts, diagram, style):
    names = ts.net.variables.names
    out = {}
    for key, node in diagram.nodes.items():
        from .dd import to_expression
        out[key] = render_expr(
            to_expression(ts.manager, node.states.ref, style), names)
    return out


# ---------------------------------------------------------------------------
# subcommands


def cmd_attractors(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    payload = {
        "space_size": ts.space_size(),
        "partial": partial,
        "attractors": [_attractor_payload(a) for a in attrs],
    }
    _emit_json(args, payload)
    return 0


def cmd_basins(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    triples = basins_mod.basin_triples(ts, attrs)
    payload = {
        "space_size": ts.space_size(),
        "partial": partial,
        "basins": basins_mod.basins_to_json(triples),
    }
    _emit_json(args, payload)
    if args.svg:
        _write(args.svg, report_mod.basin_barplot_svg(triples, ts.space_size()))
    return 0


def cmd_commitment(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    diagram = diag_mod.commitment_diagram(ts, attrs, partial)
    style = _STYLES[args.expression_style]
    payload = diagram_to_payload(ts, diagram, style)
    payload["attractors"] = [_attractor_payload(a) for a in attrs]
    _emit_json(args, payload)
    if args.dot:
        _write(args.dot, report_mod.diagram_to_dot(diagram))
    if args.svg:
        _write(args.svg, _diagram_pie(ts, diagram))
    return 0


def diagram_to_payload(ts, diagram, style) -> dict:
    return diag_mod.diagram_to_json(
        diagram, _node_expressions(ts, diagram, style))


def _diagram_pie(ts, diagram) -> str:
    blocks = [("{" + ",".join(map(str, key)) + "}", diagram.nodes[key].size)
              for key in diagram.sorted_keys()]
    return report_mod.basin_piechart_svg(blocks, ts.space_size())


def cmd_phenotypes(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    markers = _markers(args, ts)
    phenos = diag_mod.compute_phenotypes(ts, attrs, markers)
    diagram = diag_mod.phenotype_diagram(ts, attrs, phenos, partial)
    style = _STYLES[args.expression_style]
    payload = {
        "markers": markers,
        "phenotypes": [
            {"index": p.index, "pattern": p.pattern,
             "attractors": list(p.attractor_indices)}
            for p in phenos
        ],
        "diagram": diagram_to_payload(ts, diagram, style),
    }
    _emit_json(args, payload)
    if args.dot:
        _write(args.dot, report_mod.diagram_to_dot(diagram))
    if args.svg:
        _write(args.svg, _diagram_pie(ts, diagram))
    return 0


def cmd_check(args) -> int:
    ts = _build_ts(args)
    try:
        formula = parse_ctl(args.ctl)
        result = accept(ts, formula, _STYLES[args.expression_style])
    except CtlError as exc:
        raise DomainError(str(exc)) from exc
    names = ts.net.variables.names
    payload = {
        "formula": render_ctl(formula, names),
        "count": result.count,
        "expression": render_expr(result.expression, names),
        "style": args.expression_style,
    }
    _emit_json(args, payload)
    return 0


def cmd_render(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    diagram = diag_mod.commitment_sets(ts, attrs, partial)
    colouring = {}
    for key, node in diagram.nodes.items():
        for s in node.states.states():
            colouring[s] = key
    attractor_states = set()
    for a in attrs:
        attractor_states.update(a.states.states())
    try:
        dot = report_mod.small_stg_to_dot(ts, colouring, attractor_states)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    _write(args.dot or "-", dot)
    return 0


def cmd_simulate(args) -> int:
    ts = _build_ts(args)
    attrs, partial = _get_attractors(ts, args)
    markers = _markers(args, ts)
    phenos = diag_mod.compute_phenotypes(ts, attrs, markers)
    result = diag_mod.simulate_phenotype_reachability(
        ts, phenos, attrs, args.walks, args.seed)
    payload = {
        "markers": markers,
        "walks": result.walks,
        "capped": result.capped,
        "seed": args.seed,
        "frequencies": {
            result.pattern_by_index[i]: round(freq, 10)
            for i, freq in sorted(result.frequencies.items())
        },
    }
    _emit_json(args, payload)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p, markers=False, ctl=False, walks=False):
    p.add_argument("--bnet", required=True, help="path to the .bnet model")
    p.add_argument("--update", choices=("async", "sync"), default="async")
    p.add_argument("--json", default=None, metavar="PATH|-",
                   help="write the JSON result to PATH (or - for stdout)")
    p.add_argument("--dot", default=None, metavar="PATH")
    p.add_argument("--svg", default=None, metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attractor-file", default=None, metavar="PATH",
                   help="JSON list of attractor seeds; skips detection")
    p.add_argument("--expression-style", choices=sorted(_STYLES),
                   default="isop")
    if markers:
        p.add_argument("--markers", required=True, metavar="CSV",
                       help="comma-separated marker variables")
    if ctl:
        p.add_argument("--ctl", required=True, metavar="FORMULA")
    if walks:
        p.add_argument("--walks", type=int, default=10000)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basinscope",
        description="Symbolic attractor, basin, commitment and phenotype "
                    "analysis of Boolean networks.")
    sub = parser.add_subparsers(dest="command", required=True)
    specs = [
        ("attractors", cmd_attractors, {}),
        ("basins", cmd_basins, {}),
        ("commitment", cmd_commitment, {}),
        ("phenotypes", cmd_phenotypes, {"markers": True}),
        ("check", cmd_check, {"ctl": True}),
        ("render", cmd_render, {}),
        ("simulate", cmd_simulate, {"markers": True, "walks": True}),
    ]
    for name, func, extra in specs:
        p = sub.add_parser(name)
        _add_common(p, **extra)
        p.set_defaults(func=func)
    return parser


def run(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BnetError, CtlError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
