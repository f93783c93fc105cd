"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error (parse/validation),
3 combination or suitability refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import config
from .combine import SlotConflictError, compose, validate_combination
from .generate import generate_graph
from .graphml import GraphmlError, parse_graphml, write_graphml
from .guidelines import RecordValidationError
from .metrics import compute_metrics
from .model import GenerationSpec, GraphError, InvalidGenerationSpecError
from .registry import GuidelineRegistry, NotFoundError
from .rendering import (
    MissingDataError,
    PlanGraphMismatchError,
    RenderOptions,
    applied_from_registry,
    render,
)
from .service import analytics_json, metrics_json
from .suitability import CriterionStatus, Suitability, assess
from .svg import scene_to_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_REFUSED = 3

_STATUS_SYMBOL = {
    CriterionStatus.MATCH: "✓",
    CriterionStatus.NO_MATCH: "~",
    CriterionStatus.MISMATCH: "✗",
    CriterionStatus.MOOT: "-",
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; our contract reserves 2 for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _registry(args) -> GuidelineRegistry:
    path = getattr(args, "registry", None) or os.environ.get(config.REGISTRY_ENV_VAR)
    return GuidelineRegistry.load(path or None)


def _read_graph(path: str):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_graphml(data)


def _write_out(data: bytes, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(out).write_bytes(data)


def cmd_generate(args) -> int:
    try:
        spec = GenerationSpec(
            node_count=args.nodes,
            cluster_count=args.clusters,
            timestep_count=args.timesteps,
            directed=args.directed,
            attachment_edges=args.attachment_edges,
            seed=args.seed,
        )
    except InvalidGenerationSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    _write_out(write_graphml(generate_graph(spec)), args.output)
    return EXIT_OK


def cmd_metrics(args) -> int:
    graph = _read_graph(args.file)
    metrics = compute_metrics(graph)
    if args.json:
        print(json.dumps(metrics_json(metrics), indent=2))
        return EXIT_OK
    print(f"nodes:    {metrics.node_count}")
    print(f"edges:    {metrics.edge_count}")
    print(f"density:  {metrics.density:.4f}")
    print(f"types:    {', '.join(sorted(t.value for t in metrics.detected_types))}")
    if metrics.timestep_count > 1:
        counts = ", ".join(str(c) for c in metrics.per_timestep_edge_counts)
        print(f"slices:   {metrics.timestep_count} (edges per slice: {counts})")
    return EXIT_OK


_SUMMARY_ORDER = {Suitability.WELL_SUITED: 0, Suitability.MEDIUM: 1, Suitability.NOT_SUITED: 2}


def cmd_match(args) -> int:
    registry = _registry(args)
    graph = _read_graph(args.file)
    metrics = compute_metrics(graph)
    rows = []
    for record in registry.records():
        a = assess(record, metrics)
        rows.append((a, record))
    rows.sort(key=lambda row: (_SUMMARY_ORDER[row[0].summary], row[1].id))
    if args.json:
        from .service import assessment_json

        print(json.dumps(
            [{"id": r.id, "assessment": assessment_json(a)} for a, r in rows], indent=2,
        ))
        return EXIT_OK
    width = max(len(r.id) for _, r in rows) if rows else 0
    for a, record in rows:
        marks = (
            f"GT {_STATUS_SYMBOL[a.gt]}  #N {_STATUS_SYMBOL[a.n]}  #D {_STATUS_SYMBOL[a.d]}"
        )
        print(f"{record.id:<{width}}  {a.summary.value:<11}  {marks}")
    return EXIT_OK


def cmd_render(args) -> int:
    registry = _registry(args)
    graph = _read_graph(args.file)
    metrics = compute_metrics(graph)
    try:
        violations = validate_combination(registry, args.guideline, args.combine, metrics)
    except NotFoundError as exc:
        print(f"error: unknown guideline {exc.args[0]!r}", file=sys.stderr)
        return EXIT_DATA
    if violations:
        for v in violations:
            print(f"refused {v.rule}: {v.message} ({', '.join(v.guideline_ids)})", file=sys.stderr)
        return EXIT_REFUSED
    for guideline_id in (args.guideline, *args.combine):
        summary = assess(registry.guideline_details(guideline_id), metrics).summary
        if summary is not Suitability.WELL_SUITED:
            print(f"suitability: {summary.value} ({guideline_id})", file=sys.stderr)
    try:
        plan = compose(registry, args.guideline, args.combine, metrics)
        scene = render(graph, plan, RenderOptions(seed=args.seed),
                       applied=applied_from_registry(registry, plan))
    except (SlotConflictError, PlanGraphMismatchError, MissingDataError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    _write_out(scene_to_svg(scene), args.output)
    return EXIT_OK


def cmd_analytics(args) -> int:
    report = _registry(args).corpus_analytics()
    if args.json:
        print(json.dumps(analytics_json(report), indent=2))
        return EXIT_OK
    print(f"guidelines: {report.guideline_count}")
    print("per decision category:")
    for name, count in report.decision_category_counts.items():
        print(f"  {name:<24} {count}")
    print("per graph type:")
    for name, count in report.graph_type_counts.items():
        print(f"  {name:<24} {count}")
    print("task histogram:")
    for name, count in sorted(report.task_histogram.items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"  {name:<32} {count}")
    if report.max_study_node_count is not None:
        print(
            "study node counts: midpoints "
            f"min {report.node_midpoint_min:g} / median {report.node_midpoint_median:g} / "
            f"max {report.node_midpoint_max:g}; largest studied graph "
            f"{report.max_study_node_count} nodes"
        )
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import run

    run(host=args.host, port=args.port, registry_path=args.registry)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphguide", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a graph and emit GraphML")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--clusters", type=int, default=1)
    p.add_argument("--timesteps", type=int, default=1)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--attachment-edges", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("metrics", help="report metrics of a GraphML file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("match", help="rank guidelines against a GraphML file")
    p.add_argument("file")
    p.add_argument("--registry", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("render", help="render a GraphML file with guidelines applied")
    p.add_argument("file")
    p.add_argument("--guideline", required=True)
    p.add_argument("--combine", action="append", default=[])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--registry", default=None)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("analytics", help="corpus analytics of the registry")
    p.add_argument("--registry", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analytics)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--registry", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (GraphmlError, GraphError, RecordValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NotFoundError as exc:
        print(f"error: unknown id {exc.args[0]!r}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
