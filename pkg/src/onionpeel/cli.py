"""Command-line entry point.

Subcommands: gen, peel, forest, disk, triangulate, bd, pipeline, oracle,
verify.  Graphs travel as EPG text (stdin or --in), reports as JSON
(--json or stdout).  Exit codes: 0 success, 1 domain error (message names
the error variant), 2 usage error.  Identical inputs and flags produce
byte-identical outputs; per-stage timings go to stderr only.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass

from .branchdecomp import (
    build_branch_tree,
    build_dual_tree,
    decompose_pipeline,
    treewidth_bound,
)
from .embedding import Embedding
from .epg import format_epg, parse_epg, to_dot
from .errors import BadParameter, FormatError, InvariantViolation, OnionPeelError
from .generators import FAMILIES, GadgetSpec, build_gadget
from .oracles import OracleBudget, brute_branchwidth, brute_outerplanarity, certify_theorem1
from .peeling import build_rooted_forest, onion_peels, saturate_inward_neighbors
from .triangulate import to_full_triangulation, to_triangulated_disk


@dataclass(frozen=True)
class RunReport:
    """Headline numbers of a pipeline run; bounds re-checked before emission."""

    command: str
    input_digest: str
    k_in: int
    k_out: int
    forest_height: int
    bd_width: int
    tw_bound: int

    def check(self) -> None:
        if self.command in ("disk", "pipeline") and self.k_out > self.k_in:
            raise InvariantViolation(f"{self.command} report: k_out > k_in")
        if self.command == "triangulate" and self.k_out > self.k_in + 1:
            raise InvariantViolation("triangulate report: k_out > k_in + 1")
        if self.bd_width > 2 * self.k_in:
            raise InvariantViolation("report: bd_width > 2k")
        if self.tw_bound > 3 * self.k_in - 1:
            raise InvariantViolation("report: tw_bound > 3k - 1")


def _read_embedding(args) -> Embedding:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return parse_epg(fh.read())
    return parse_epg(sys.stdin.read())


def _digest(emb: Embedding) -> str:
    return hashlib.sha256(format_epg(emb).encode()).hexdigest()


def _emit_text(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, path: str | None) -> None:
    _emit_text(json.dumps(obj, sort_keys=True) + "\n", path)


def _trace_json(trace, emb_in: Embedding, emb_out: Embedding) -> dict:
    return {
        "added": [[u, v, stage] for u, v, stage in trace.added_edges],
        "k_in": onion_peels(emb_in).k,
        "k_out": onion_peels(emb_out).k,
    }


# -- subcommand handlers -----------------------------------------------------


def _cmd_gen(args) -> int:
    if args.family != "k4_minus_edge" and args.parameter is None:
        raise BadParameter(f"family {args.family!r} requires a parameter")
    spec = GadgetSpec(
        family=args.family,
        parameter=args.parameter if args.parameter is not None else 1,
        seed=args.seed,
        width=args.width,
    )
    emb = build_gadget(spec)
    _emit_text(format_epg(emb), args.out)
    if args.dot:
        _emit_text(to_dot(emb), args.dot)
    return 0


def _cmd_peel(args) -> int:
    emb = _read_embedding(args)
    peels = onion_peels(emb)
    _emit_json(
        {"k": peels.k, "layers": [sorted(layer) for layer in peels.layers]},
        args.json,
    )
    return 0


def _cmd_forest(args) -> int:
    emb = _read_embedding(args)
    forest = build_rooted_forest(saturate_inward_neighbors(emb))
    _emit_json(
        {
            "height": forest.height,
            "roots": sorted(forest.roots),
            "parents": [[v, p] for v, p in sorted(forest.parent.items())],
            "depth": [[v, d] for v, d in sorted(forest.depth.items())],
        },
        args.json,
    )
    return 0


def _cmd_convert(args, full: bool) -> int:
    emb = _read_embedding(args)
    t0 = time.monotonic()
    out, trace = to_full_triangulation(emb) if full else to_triangulated_disk(emb)
    print(
        f"{'triangulate' if full else 'disk'}: {1000 * (time.monotonic() - t0):.1f} ms",
        file=sys.stderr,
    )
    _emit_text(format_epg(out), args.out)
    if args.dot:
        _emit_text(to_dot(out), args.dot)
    if args.json:
        _emit_json(_trace_json(trace, emb, out), args.json)
    return 0


def _cmd_bd(args) -> int:
    emb = _read_embedding(args)
    disk, _ = to_triangulated_disk(emb)
    forest = build_rooted_forest(disk)
    dual = build_dual_tree(disk, forest)
    bd = build_branch_tree(dual, disk, forest)
    nodes = []
    for n in bd.nodes:
        rec: dict = {"id": n.id, "kind": n.kind}
        if n.face is not None:
            rec["face"] = n.face
        if n.edge is not None:
            rec["edge"] = list(n.edge)
        nodes.append(rec)
    _emit_json(
        {
            "nodes": nodes,
            "arcs": [list(a) for a in bd.arcs],
            "assignment": {f"{u}-{v}": leaf for (u, v), leaf in sorted(bd.assignment.items())},
            "width": bd.width,
            "bounds": {
                "2h": 2 * (forest.height + 1),
                "tw": treewidth_bound(bd.width),
            },
        },
        args.json,
    )
    return 0


def _cmd_pipeline(args) -> int:
    emb = _read_embedding(args)
    stages: list[tuple[str, float]] = []
    t0 = time.monotonic()
    cert = decompose_pipeline(emb)
    stages.append(("decompose", time.monotonic() - t0))
    t0 = time.monotonic()
    disk, _ = to_triangulated_disk(emb)
    k_out = onion_peels(disk).k
    stages.append(("recheck", time.monotonic() - t0))
    report = RunReport(
        command="pipeline",
        input_digest=_digest(emb),
        k_in=cert.peel_count,
        k_out=k_out,
        forest_height=cert.forest_height,
        bd_width=cert.width,
        tw_bound=cert.tw_bound,
    )
    report.check()
    for name, dt in stages:
        print(f"pipeline.{name}: {1000 * dt:.1f} ms", file=sys.stderr)
    _emit_json(report.__dict__, args.json)
    return 0


def _cmd_oracle(args) -> int:
    budget = OracleBudget(
        max_edges=args.budget_edges,
        max_vertices=args.budget_vertices,
        max_chord_sets=args.budget_chords,
    )
    if args.which == "bw":
        emb = _read_embedding(args)
        width = brute_branchwidth(emb, budget)
        _emit_json(
            {"oracle": "bw", "edges": emb.edge_count, "branchwidth": width},
            args.json,
        )
        return 0
    if args.which == "outerplanarity":
        emb = _read_embedding(args)
        k = brute_outerplanarity(emb, budget)
        _emit_json(
            {"oracle": "outerplanarity", "vertices": emb.vertex_count, "k": k},
            args.json,
        )
        return 0
    if args.k >= 3 and not args.slow:
        raise BadParameter("theorem1 with k >= 3 requires --slow")
    try:
        threads = max(1, int(os.environ.get("ONIONPEEL_THREADS", "1")))
    except ValueError:
        raise BadParameter("ONIONPEEL_THREADS must be an integer") from None
    report = certify_theorem1(args.k, budget, threads=threads)
    _emit_json(
        {
            "oracle": "theorem1",
            "k": report.k,
            "triangulations": report.triangulation_count,
            "min_outerplanarity": report.min_outerplanarity,
            "three_connected": report.three_connected,
            "passed": report.passed,
            "assumption": report.assumption,
        },
        args.json,
    )
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    if not args.json:
        raise BadParameter("verify requires --json ARTIFACT")
    with open(args.json, "r", encoding="utf-8") as fh:
        try:
            artifact = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"artifact is not JSON: {exc}") from None
    emb = _read_embedding(args)
    kind = _artifact_kind(artifact)
    checker = {
        "peel": _verify_peel,
        "forest": _verify_forest,
        "trace": _verify_conversion,
        "bd": _verify_bd,
        "pipeline": _verify_pipeline,
        "oracle": _verify_oracle,
    }[kind]
    checker(emb, artifact, args)
    print(f"verified: {kind} artifact is consistent", file=sys.stderr)
    return 0


def _artifact_kind(artifact: dict) -> str:
    if "oracle" in artifact:
        return "oracle"
    if "layers" in artifact:
        return "peel"
    if "parents" in artifact:
        return "forest"
    if "added" in artifact:
        return "trace"
    if "assignment" in artifact:
        return "bd"
    if "bd_width" in artifact:
        return "pipeline"
    raise FormatError("unrecognized artifact type")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


def _verify_peel(emb, artifact, args) -> None:
    peels = onion_peels(emb)
    _require(artifact["k"] == peels.k, "peel artifact: k mismatch")
    _require(
        artifact["layers"] == [sorted(layer) for layer in peels.layers],
        "peel artifact: layers mismatch",
    )


def _verify_forest(emb, artifact, args) -> None:
    forest = build_rooted_forest(saturate_inward_neighbors(emb))
    _require(artifact["height"] == forest.height, "forest artifact: height mismatch")
    _require(artifact["roots"] == sorted(forest.roots), "forest artifact: roots mismatch")
    _require(
        artifact["parents"] == [[v, p] for v, p in sorted(forest.parent.items())],
        "forest artifact: parents mismatch",
    )
    _require(
        artifact["depth"] == [[v, d] for v, d in sorted(forest.depth.items())],
        "forest artifact: depth mismatch",
    )


def _verify_conversion(emb, artifact, args) -> None:
    # k_out == k_in + 1 can only come from the apex step
    full = artifact["k_out"] > artifact["k_in"] or any(
        stage == "apex" for _, _, stage in artifact["added"]
    )
    out, trace = to_full_triangulation(emb) if full else to_triangulated_disk(emb)
    _require(
        artifact == _trace_json(trace, emb, out),
        "conversion artifact: rerun differs",
    )
    if args.out:
        with open(args.out, "r", encoding="utf-8") as fh:
            _require(
                parse_epg(fh.read()) == out,
                "conversion artifact: output embedding differs",
            )


def _verify_bd(emb, artifact, args) -> None:
    """Independent re-check of a claimed branch decomposition.

    Validates the tree shape and assignment directly and recomputes every
    cut from the leaf-bipartition definition, without using the library's
    construction or its bottom-up width aggregation.
    """
    disk, _ = to_triangulated_disk(emb)
    nodes = {n["id"]: n for n in artifact["nodes"]}
    arcs = [tuple(a) for a in artifact["arcs"]]
    adj: dict[int, list[int]] = {i: [] for i in nodes}
    for a, b in arcs:
        adj[a].append(b)
        adj[b].append(a)
    _require(len(arcs) == len(nodes) - 1, "bd artifact: arc count")
    seen = {min(nodes)}
    stack = [min(nodes)]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    _require(len(seen) == len(nodes), "bd artifact: tree disconnected")
    _require(all(len(adj[i]) <= 3 for i in nodes), "bd artifact: degree > 3")
    assignment = {}
    for key, leaf in artifact["assignment"].items():
        u, v = (int(t) for t in key.split("-"))
        assignment[(u, v)] = leaf
    _require(
        sorted(assignment) == list(disk.edges), "bd artifact: edges mismatch"
    )
    _require(
        len(set(assignment.values())) == len(assignment),
        "bd artifact: assignment not injective",
    )
    for leaf in assignment.values():
        _require(len(adj[leaf]) == 1, "bd artifact: assigned node not a leaf")
        _require(nodes[leaf]["kind"] == "edge", "bd artifact: leaf kind")
    width = 0
    for a, b in arcs:
        side = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if {x, y} == {a, b} or y in side:
                    continue
                side.add(y)
                stack.append(y)
        side_edges = {e for e, leaf in assignment.items() if leaf in side}
        other_edges = set(assignment) - side_edges
        crossing = {
            w
            for u, v in side_edges
            for w in (u, v)
            if any(w in e for e in other_edges)
        }
        width = max(width, len(crossing))
    _require(width == artifact["width"], "bd artifact: width mismatch")
    _require(
        artifact["bounds"]["tw"] == treewidth_bound(width),
        "bd artifact: tw bound mismatch",
    )


def _verify_pipeline(emb, artifact, args) -> None:
    cert = decompose_pipeline(emb)
    disk, _ = to_triangulated_disk(emb)
    expect = RunReport(
        command="pipeline",
        input_digest=_digest(emb),
        k_in=cert.peel_count,
        k_out=onion_peels(disk).k,
        forest_height=cert.forest_height,
        bd_width=cert.width,
        tw_bound=cert.tw_bound,
    )
    _require(artifact == expect.__dict__, "pipeline artifact: rerun differs")


def _verify_oracle(emb, artifact, args) -> None:
    budget = OracleBudget(
        max_edges=args.budget_edges,
        max_vertices=args.budget_vertices,
        max_chord_sets=args.budget_chords,
    )
    if artifact["oracle"] == "bw":
        _require(
            artifact["branchwidth"] == brute_branchwidth(emb, budget),
            "oracle artifact: branchwidth mismatch",
        )
    elif artifact["oracle"] == "outerplanarity":
        _require(
            artifact["k"] == brute_outerplanarity(emb, budget),
            "oracle artifact: outerplanarity mismatch",
        )
    else:
        report = certify_theorem1(artifact["k"], budget)
        _require(
            artifact["min_outerplanarity"] == report.min_outerplanarity
            and artifact["passed"] == report.passed,
            "oracle artifact: theorem1 mismatch",
        )


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onionpeel",
        description="triangulate k-outerplanar embeddings and certify the bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p, graph_out=False):
        p.add_argument("--in", dest="infile", metavar="PATH", help="EPG input (default stdin)")
        p.add_argument("--json", metavar="PATH", help="JSON report output (default stdout)")
        if graph_out:
            p.add_argument("--out", metavar="PATH", help="EPG output (default stdout)")
            p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")

    p = sub.add_parser("gen", help="emit a corpus family instance as EPG")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("parameter", nargs="?", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--width", type=int, default=5, help="ring width (random_kouter)")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("peel", help="onion-peel layers as JSON")
    io_flags(p)
    p.set_defaults(func=_cmd_peel)

    p = sub.add_parser("forest", help="saturate, then BFS spanning forest as JSON")
    io_flags(p)
    p.set_defaults(func=_cmd_forest)

    p = sub.add_parser("disk", help="convert to a triangulated disk")
    io_flags(p, graph_out=True)
    p.set_defaults(func=lambda a: _cmd_convert(a, full=False))

    p = sub.add_parser("triangulate", help="convert to a full triangulation")
    io_flags(p, graph_out=True)
    p.set_defaults(func=lambda a: _cmd_convert(a, full=True))

    p = sub.add_parser("bd", help="branch decomposition as JSON")
    io_flags(p)
    p.set_defaults(func=_cmd_bd)

    p = sub.add_parser("pipeline", help="disk + forest + branch decomposition report")
    io_flags(p)
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("which", choices=["bw", "outerplanarity", "theorem1"])
    p.add_argument("k", nargs="?", type=int, default=1, help="theorem1 parameter")
    p.add_argument("--slow", action="store_true", help="allow theorem1 k >= 3")
    io_flags(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="independently re-check an emitted artifact")
    io_flags(p)
    p.add_argument("--out", metavar="PATH", help="claimed EPG output of a conversion")
    p.set_defaults(func=_cmd_verify)

    for p in sub.choices.values():
        p.add_argument("--budget-edges", type=int, default=9)
        p.add_argument("--budget-vertices", type=int, default=7)
        p.add_argument("--budget-chords", type=int, default=10**6)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OnionPeelError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
