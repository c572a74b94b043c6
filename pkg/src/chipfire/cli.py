"""Command-line front end.

Reads edge-list files, runs group computations or theorem verifications, and
emits line-delimited JSON (default) or aligned tables.  Output is
deterministic: stable key order, stable array order, group orders serialized
as decimal strings so downstream consumers never overflow.

Exit codes: 0 success / all checks hold, 1 a verification check failed,
2 input error, 3 precondition error (for example a disconnected graph).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from functools import reduce
from typing import Iterable, List, Optional, Sequence

from .errors import InputError, NotConnectedError, SizeError
from .graphs import Graph, cone, join, read_edge_list
from .sandpile import char_poly_restricted, critical_group, spanning_tree_count
from .theorems import (
    ConeSequenceReport,
    JoinOrderReport,
    TreeBoundReport,
    random_connected_graph,
    random_tree,
    verify_cone_theorem,
    verify_eigenvectors,
    verify_join_theorem,
    verify_tree_bound,
)

__all__ = ["main", "entry", "build_parser"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "table"],
        default="json",
        help="output format (default: json, one object per line)",
    )
    common.add_argument(
        "--cone",
        type=int,
        default=None,
        metavar="N",
        help="replace each input graph by its nth cone before computing",
    )

    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Chip-firing groups of graphs via exact integer linear algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    remove_flag = dict(
        type=int,
        default=0,
        metavar="V",
        help="delete this vertex in the reduced Laplacian (debug; result is invariant)",
    )

    p_group = sub.add_parser(
        "group", parents=[common], help="critical group of a graph file"
    )
    p_group.add_argument("file")
    p_group.add_argument("--remove-vertex", **remove_flag)

    p_cone = sub.add_parser(
        "cone", parents=[common], help="critical group of the nth cone over a graph file"
    )
    p_cone.add_argument("file")
    p_cone.add_argument("n", type=int)
    p_cone.add_argument("--remove-vertex", **remove_flag)

    p_join = sub.add_parser(
        "join", parents=[common], help="critical group of the join of several graph files"
    )
    p_join.add_argument("files", nargs="+")
    p_join.add_argument("--remove-vertex", **remove_flag)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="mechanically check one of the structure theorems"
    )
    p_verify.add_argument("which", choices=["cone", "tree", "join", "eigen"])
    p_verify.add_argument("files", nargs="*")
    p_verify.add_argument(
        "-n",
        dest="n",
        type=int,
        default=1,
        help="cone size used by the verification (default 1)",
    )
    p_verify.add_argument(
        "--sample",
        type=int,
        default=None,
        metavar="COUNT",
        help="verify COUNT random instances instead of files",
    )
    p_verify.add_argument(
        "--seed", type=int, default=0, help="seed for --sample instance generation"
    )
    return parser


def _apply_cone(g: Graph, cone_size: Optional[int]) -> Graph:
    return g if cone_size is None else cone(g, cone_size)


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" if n == 1 else f"{n} {noun}s"


def _summarize(g: Graph) -> str:
    return f"{_count(g.vertex_count, 'vertex')}, {_count(g.edge_count, 'edge')}"


def _load(path: str, cone_size: Optional[int]) -> tuple:
    raw = read_edge_list(path)
    return _apply_cone(raw, cone_size), f"{path}: {_summarize(raw)}"


def _group_result(g: Graph, remove: int = 0) -> dict:
    group = critical_group(g, remove)
    poly = char_poly_restricted(g)
    return {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "invariant_factors": list(group.invariant_factors),
        "group": str(group),
        "order": str(group.order),
        "spanning_trees": str(spanning_tree_count(g, remove)),
        "char_poly": list(poly.coefficients),
        "char_poly_str": str(poly),
    }


def _record(command: str, input_summary: str, result: dict) -> dict:
    return {"command": command, "input_summary": input_summary, "result": result}


def _cone_report_result(report: ConeSequenceReport) -> dict:
    return {
        "base_vertices": report.base_vertices,
        "cone_size": report.cone_size,
        "pic0_factors": list(report.pic0.invariant_factors),
        "pic0_order": str(report.pic0.order),
        "subgroup_factors": list(report.subgroup.invariant_factors),
        "quotient_factors": list(report.quotient_h.invariant_factors),
        "quotient_order": str(report.quotient_h.order),
        "p_at_minus_n": str(report.p_at_minus_n),
        "order_formula_holds": report.order_formula_holds,
        "subgroup_is_expected": report.subgroup_is_expected,
        "splits": report.splits,
        "h_generator_count": report.h_generator_count,
        "holds": report.holds,
    }


def _join_report_result(report: JoinOrderReport) -> dict:
    return {
        "factor_vertex_counts": list(report.factor_vertex_counts),
        "total_vertices": report.total_vertices,
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "holds": report.holds,
    }


def _tree_report_result(n: int, report: TreeBoundReport) -> dict:
    return {
        "cone_size": n,
        "leaf_count": report.leaf_count,
        "h_generators": report.h_generators,
        "holds": report.holds,
    }


def _sample_graphs(args) -> Iterable[tuple]:
    rng = random.Random(args.seed)
    for index in range(args.sample):
        if args.which == "tree":
            g = random_tree(rng, rng.randint(2, 7))
        elif args.which == "join":
            factors = [
                random_connected_graph(rng, rng.randint(1, 5))
                for _ in range(rng.randint(2, 3))
            ]
            yield factors, f"sample {index} (seed={args.seed})"
            continue
        else:
            g = random_connected_graph(rng, rng.randint(2, 6))
        yield g, f"sample {index} (seed={args.seed}): {_summarize(g)}"


def _run_verify(args) -> tuple:
    records: List[dict] = []
    all_hold = True

    if args.sample is not None and args.files:
        raise InputError("give input files or --sample, not both")
    if args.sample is None and not args.files:
        raise InputError("verify needs input files or --sample COUNT")

    if args.which == "join":
        if args.sample is not None:
            instances = list(_sample_graphs(args))
        else:
            if len(args.files) < 2:
                raise InputError("verify join needs at least two graph files")
            loaded = [_load(path, None) for path in args.files]
            instances = [([g for g, _ in loaded], " + ".join(args.files))]
        for factors, summary in instances:
            factors = [_apply_cone(f, args.cone) for f in factors]
            report = verify_join_theorem(factors)
            records.append(_record("verify join", summary, _join_report_result(report)))
            all_hold = all_hold and report.holds
        return records, all_hold

    if args.sample is not None:
        instances = list(_sample_graphs(args))
        if args.cone is not None:
            instances = [(cone(g, args.cone), s) for g, s in instances]
    else:
        instances = [_load(path, args.cone) for path in args.files]

    for g, summary in instances:
        if args.which == "cone":
            report = verify_cone_theorem(g, args.n)
            records.append(_record("verify cone", summary, _cone_report_result(report)))
            all_hold = all_hold and report.holds
        elif args.which == "tree":
            tree_report = verify_tree_bound(g, args.n)
            records.append(
                _record("verify tree", summary, _tree_report_result(args.n, tree_report))
            )
            all_hold = all_hold and tree_report.holds
        else:
            ok = verify_eigenvectors(g, args.n)
            records.append(
                _record("verify eigen", summary, {"cone_size": args.n, "holds": ok})
            )
            all_hold = all_hold and ok
    return records, all_hold


def _render_table(record: dict) -> str:
    rows = [("command", record["command"]), ("input", record["input_summary"])]
    for key, value in record["result"].items():
        if isinstance(value, list):
            text = " ".join(str(x) for x in value) if value else "-"
        else:
            text = str(value)
        rows.append((key, text))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def _emit(records: Sequence[dict], fmt: str, out) -> None:
    for record in records:
        if fmt == "json":
            out.write(json.dumps(record) + "\n")
        else:
            out.write(_render_table(record) + "\n")


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "group":
            g, summary = _load(args.file, args.cone)
            records = [_record("group", summary, _group_result(g, args.remove_vertex))]
            exit_code = EXIT_OK
        elif args.command == "cone":
            raw, summary = _load(args.file, args.cone)
            g = cone(raw, args.n)
            records = [_record("cone", summary, _group_result(g, args.remove_vertex))]
            exit_code = EXIT_OK
        elif args.command == "join":
            loaded = [_load(path, args.cone) for path in args.files]
            g = reduce(join, [g for g, _ in loaded])
            records = [
                _record("join", " + ".join(args.files), _group_result(g, args.remove_vertex))
            ]
            exit_code = EXIT_OK
        else:
            records, all_hold = _run_verify(args)
            exit_code = EXIT_OK if all_hold else EXIT_VERIFY_FAILED
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (NotConnectedError, SizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(records, args.format, out)
    return exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
