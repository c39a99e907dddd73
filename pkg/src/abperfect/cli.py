"""Command-line front end: solvers, perfectness checks, recognition, sweeps.

Exit status: 0 on success, 1 when a sweep or cycle table finds
violations, 2 on usage errors, unparsable input, or a solver capacity
cap.  The json format is the stable contract; text output is
human-oriented and may change.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .forbidden import FAMILIES, family_check
from .graph6 import Graph6Error, parse_graph6
from .graphs import (
    CapacityError,
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    k44_c7_graph,
    path_graph,
)
from .harness import THEOREM_IDS, cycle_alpha_psi, ingest, report, sweep
from .perfectness import (
    INVARIANT_CHAIN,
    PerfectnessVerdict,
    StructureTree,
    is_ab_perfect,
    recognize_structure,
)
from .solvers import profile

FORMATS = ("text", "json", "csv")

_NAMED_HELP = (
    "kN (complete), pN (path), cN (cycle), eN (empty), kA,B (complete "
    "bipartite), p3+k2, 3k2, fig2 (the 13-vertex K4,4-with-C7 witness)"
)


def _named_graph(token: str) -> Graph:
    t = token.strip().lower()
    if t == "fig2":
        return k44_c7_graph()
    if t == "p3+k2":
        return disjoint_union(path_graph(3), complete_graph(2))
    if t == "3k2":
        k2 = complete_graph(2)
        return disjoint_union(disjoint_union(k2, k2), k2)
    bipartite = re.fullmatch(r"k(\d+),(\d+)", t)
    if bipartite:
        return complete_bipartite(int(bipartite.group(1)), int(bipartite.group(2)))
    family = re.fullmatch(r"([kpce])(\d+)", t)
    if family:
        n = int(family.group(2))
        maker = {
            "k": complete_graph,
            "p": path_graph,
            "c": cycle_graph,
            "e": empty_graph,
        }[family.group(1)]
        return maker(n)
    raise ValueError(f"unknown named graph {token!r}; expected {_NAMED_HELP}")


def _load_graphs(args) -> tuple[list[Graph], bool]:
    """Graphs from --g6/--named/--file; second item flags single-graph mode."""
    if args.g6 is not None:
        return [parse_graph6(args.g6)], True
    if args.named is not None:
        return [_named_graph(args.named)], True
    if args.file == "-":
        return list(ingest(sys.stdin)), False
    return list(ingest(args.file)), False


def _add_source_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="STR", help="one graph6 string")
    group.add_argument("--named", metavar="KIND", help=f"named graph: {_NAMED_HELP}")
    group.add_argument(
        "--file", metavar="PATH", help="file of graph6 lines ('-' for stdin)"
    )


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text")


def _emit(text: str) -> None:
    print(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_params(args) -> int:
    graphs, single = _load_graphs(args)
    profiles = [profile(g) for g in graphs]
    if args.format == "json" and single:
        _emit(json.dumps(profiles[0].to_dict()))
    else:
        _emit(report(profiles, args.format))
    return 0


def _flat_verdict(v: PerfectnessVerdict) -> dict:
    row: dict = {"a": v.pair[0], "b": v.pair[1], "perfect": v.perfect}
    if v.counterexample is None:
        row.update({"vertices": "", "a_value": "", "b_value": ""})
    else:
        vertices, a_val, b_val = v.counterexample
        row.update(
            {
                "vertices": " ".join(str(x) for x in sorted(vertices)),
                "a_value": a_val,
                "b_value": b_val,
            }
        )
    return row


def _verdict_text(v: PerfectnessVerdict) -> str:
    a, b = v.pair
    if v.perfect:
        return f"{a}-{b}-perfect"
    vertices, a_val, b_val = v.counterexample
    members = ",".join(str(x) for x in sorted(vertices))
    return (
        f"not {a}-{b}-perfect: minimal counterexample {{{members}}} "
        f"with {a}={a_val}, {b}={b_val}"
    )


def _cmd_check(args) -> int:
    graphs, single = _load_graphs(args)
    verdicts = [is_ab_perfect(g, args.a, args.b) for g in graphs]
    if args.format == "json":
        payload = [v.to_dict() for v in verdicts]
        _emit(json.dumps(payload[0] if single else payload))
    elif args.format == "csv":
        _emit(report([_flat_verdict(v) for v in verdicts], "csv"))
    else:
        _emit("\n".join(_verdict_text(v) for v in verdicts))
    return 0


def _tree_rows(tree: StructureTree, depth: int = 0) -> list[dict]:
    rows = [
        {
            "depth": depth,
            "kind": tree.kind,
            "m": "" if tree.m is None else tree.m,
            "reason": tree.reason or "",
        }
    ]
    for child in tree.children:
        rows.extend(_tree_rows(child, depth + 1))
    return rows


def _tree_text(tree: StructureTree, depth: int = 0) -> list[str]:
    label = tree.kind
    if tree.m is not None:
        label += f" m={tree.m}"
    if tree.reason:
        label += f" ({tree.reason})"
    lines = ["  " * depth + label]
    for child in tree.children:
        lines.extend(_tree_text(child, depth + 1))
    return lines


def _cmd_recognize(args) -> int:
    graphs, single = _load_graphs(args)
    trees = [recognize_structure(g) for g in graphs]
    if args.format == "json":
        payload = [t.to_dict() for t in trees]
        _emit(json.dumps(payload[0] if single else payload))
    elif args.format == "csv":
        rows = []
        for t in trees:
            rows.extend(_tree_rows(t))
        _emit(report(rows, "csv"))
    else:
        lines = []
        for t in trees:
            lines.extend(_tree_text(t))
        _emit("\n".join(lines))
    return 0


def _flat_free_report(r) -> dict:
    row: dict = {"family": " ".join(r.family), "free": r.free}
    if r.witness is None:
        row.update({"witness_pattern": "", "witness_vertices": ""})
    else:
        name, vertices = r.witness
        row.update(
            {
                "witness_pattern": name,
                "witness_vertices": " ".join(str(x) for x in sorted(vertices)),
            }
        )
    return row


def _cmd_forbidden(args) -> int:
    graphs, single = _load_graphs(args)
    reports = [family_check(g, args.family) for g in graphs]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        _emit(json.dumps(payload[0] if single else payload))
    elif args.format == "csv":
        _emit(report([_flat_free_report(r) for r in reports], "csv"))
    else:
        lines = []
        for r in reports:
            if r.free:
                lines.append(f"free of ({', '.join(r.family)})")
            else:
                name, vertices = r.witness
                members = " ".join(str(x) for x in sorted(vertices))
                lines.append(f"contains {name} on vertices {members}")
        _emit("\n".join(lines))
    return 0


def _cmd_sweep(args) -> int:
    result = sweep(args.theorem, args.max_n, jobs=args.jobs)
    if args.format == "json":
        _emit(result.to_json())
    elif args.format == "csv":
        _emit(result.to_csv().rstrip("\n"))
    else:
        _emit(result.to_text())
    return 0 if result.passed else 1


def _cmd_cycles(args) -> int:
    rows = cycle_alpha_psi(args.max_n)
    _emit(report(rows, args.format))
    mismatched = any(row["equal"] != row["predicted_equal"] for row in rows)
    return 1 if mismatched else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abperfect",
        description="Exact coloring invariants and perfectness checks for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="compute the five invariants")
    _add_source_flags(p_params)
    _add_format_flag(p_params)
    p_params.set_defaults(func=_cmd_params)

    p_check = sub.add_parser("check", help="ab-perfectness with minimal counterexample")
    p_check.add_argument("--a", choices=INVARIANT_CHAIN, required=True)
    p_check.add_argument("--b", choices=INVARIANT_CHAIN, required=True)
    _add_source_flags(p_check)
    _add_format_flag(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_rec = sub.add_parser("recognize", help="structural decomposition")
    _add_source_flags(p_rec)
    _add_format_flag(p_rec)
    p_rec.set_defaults(func=_cmd_recognize)

    p_forb = sub.add_parser("forbidden", help="forbidden-family scan")
    p_forb.add_argument("--family", choices=sorted(FAMILIES), required=True)
    _add_source_flags(p_forb)
    _add_format_flag(p_forb)
    p_forb.set_defaults(func=_cmd_forbidden)

    p_sweep = sub.add_parser("sweep", help="verify one theorem over all small graphs")
    p_sweep.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p_sweep.add_argument("--max-n", type=int, required=True)
    p_sweep.add_argument("--jobs", type=int, default=1)
    _add_format_flag(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_cyc = sub.add_parser("cycles", help="achromatic vs pseudoachromatic on cycles")
    p_cyc.add_argument("--max-n", type=int, required=True)
    _add_format_flag(p_cyc)
    p_cyc.set_defaults(func=_cmd_cycles)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CapacityError, Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
