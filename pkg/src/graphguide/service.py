"""HTTP front door.

Every endpoint delegates to the engines; this layer only translates between
HTTP and engine calls (session bookkeeping, JSON shapes, status codes), so a
409/404 here always corresponds one-to-one to an engine refusal.

    POST /graphs/upload              GraphML body -> session graph
    POST /graphs/generate            generation spec -> session graph
    GET  /graphs/examples            the six example descriptors
    GET  /graphs/examples/{kind}     instantiate an example as a session graph
    GET  /graphs/{id}                session graph info
    GET  /graphs/{id}/render         ?guideline=ID&combine=ID,ID&seed=N -> SVG
    GET  /guidelines                 ?perspective&grouping&graph=ID -> taxonomy view
    GET  /guidelines/{id}            full record
    GET  /guidelines/{id}/preview    thumbnail SVG
    POST /guidelines                 add a record (stub mapping when none given)
    GET  /analytics                  corpus analytics
"""

from __future__ import annotations

import os
import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import config
from .combine import compose, validate_combination
from .examples import EXAMPLE_DESCRIPTIONS, example_graph
from .generate import generate_graph
from .graphml import GraphmlError, parse_graphml
from .guidelines import GuidelineRecord, RecordValidationError
from .metrics import compute_metrics
from .model import (
    DegenerateGraphError,
    GenerationSpec,
    Graph,
    GraphError,
    GraphMetrics,
    GraphTypeTag,
    InvalidGenerationSpecError,
)
from .registry import (
    AnalyticsReport,
    CategoryNode,
    ConflictError,
    Grouping,
    GuidelineRegistry,
    NotFoundError,
    Perspective,
    TaxonomyView,
    ViewEntry,
    record_from_dict,
)
from .rendering import (
    MissingDataError,
    PlanGraphMismatchError,
    RenderOptions,
    applied_from_registry,
    render,
    render_preview,
)
from .combine import SlotConflictError
from .suitability import SuitabilityAssessment
from .svg import scene_to_svg

SVG_MEDIA = "image/svg+xml"


@dataclass
class SessionGraph:
    graph_id: str
    graph: Graph
    metrics: GraphMetrics
    description: str


class SessionStore:
    """In-memory LRU of uploaded/generated graphs; oldest evicted at the cap."""

    def __init__(self, cap: int = config.SESSION_GRAPH_CAP):
        self._cap = cap
        self._lock = threading.Lock()
        self._graphs: OrderedDict[str, SessionGraph] = OrderedDict()

    def put(self, graph: Graph, description: str) -> SessionGraph:
        session = SessionGraph(
            graph_id=secrets.token_hex(8),
            graph=graph,
            metrics=compute_metrics(graph),
            description=description,
        )
        with self._lock:
            self._graphs[session.graph_id] = session
            while len(self._graphs) > self._cap:
                self._graphs.popitem(last=False)
        return session

    def get(self, graph_id: str) -> SessionGraph:
        with self._lock:
            try:
                session = self._graphs[graph_id]
            except KeyError:
                raise NotFoundError(graph_id) from None
            self._graphs.move_to_end(graph_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._graphs)


# ------------------------------------------------------------- JSON shaping


def metrics_json(metrics: GraphMetrics) -> dict:
    return {
        "node_count": metrics.node_count,
        "edge_count": metrics.edge_count,
        "density": metrics.density,
        "detected_types": sorted(t.value for t in metrics.detected_types),
        "timestep_count": metrics.timestep_count,
        "per_timestep_edge_counts": list(metrics.per_timestep_edge_counts),
    }


def assessment_json(assessment: SuitabilityAssessment | None) -> dict | None:
    if assessment is None:
        return None
    return {
        "gt": assessment.gt.value,
        "n": assessment.n.value,
        "d": assessment.d.value,
        "summary": assessment.summary.value,
        "applicable": assessment.applicable,
    }


def record_json(record: GuidelineRecord) -> dict:
    return {
        "id": record.id,
        "if": record.if_statement,
        "then": record.then_statement,
        "if_types": sorted(t.value for t in record.if_types),
        "graph_types": sorted(t.value for t in record.graph_types),
        "decision_path": list(record.decision_path),
        "vis_type": record.vis_type.value,
        "tasks": sorted(record.tasks),
        "sources": [
            {
                "citation": s.citation,
                "scholar_url": s.scholar_url,
                "study_node_range": list(s.study_node_range) if s.study_node_range else None,
                "study_density_range": (
                    list(s.study_density_range) if s.study_density_range else None
                ),
            }
            for s in record.sources
        ],
        "mapping": record.mapping_id,
        "unimplemented": record.is_stub,
    }


def _entry_json(entry: ViewEntry) -> dict:
    return {
        "id": entry.record.id,
        "if": entry.record.if_statement,
        "then": entry.record.then_statement,
        "vis_type": entry.record.vis_type.value,
        "unimplemented": entry.record.is_stub,
        "assessment": assessment_json(entry.assessment),
    }


def _category_json(node: CategoryNode) -> dict:
    return {
        "name": node.name,
        "groups": [[_entry_json(e) for e in group] for group in node.groups],
        "children": [_category_json(child) for child in node.children],
    }


def view_json(view: TaxonomyView) -> dict:
    return {
        "perspective": view.perspective.value,
        "grouping": view.grouping.value,
        "roots": [_category_json(root) for root in view.roots],
    }


def analytics_json(report: AnalyticsReport) -> dict:
    return {
        "guideline_count": report.guideline_count,
        "decision_category_counts": report.decision_category_counts,
        "task_histogram": report.task_histogram,
        "graph_type_counts": report.graph_type_counts,
        "study_node_midpoints": list(report.study_node_midpoints),
        "node_midpoint_min": report.node_midpoint_min,
        "node_midpoint_median": report.node_midpoint_median,
        "node_midpoint_max": report.node_midpoint_max,
        "max_study_node_count": report.max_study_node_count,
    }


def describe_generated(graph: Graph, spec: GenerationSpec) -> str:
    metrics = compute_metrics(graph)
    kind = "directed" if graph.directed else "undirected"
    return (
        f"Generated {kind} graph with {metrics.node_count} nodes, "
        f"{metrics.edge_count} edges, {spec.cluster_count} cluster(s), "
        f"{spec.timestep_count} time slice(s)."
    )


def describe_uploaded(graph: Graph) -> str:
    metrics = compute_metrics(graph)
    kind = "directed" if graph.directed else "undirected"
    extra = ""
    if graph.timestep_count > 1:
        extra = f", {graph.timestep_count} time slices"
    return (
        f"Uploaded {kind} graph with {metrics.node_count} nodes and "
        f"{metrics.edge_count} edges (density {metrics.density:.4f}{extra})."
    )


def describe_example(kind: GraphTypeTag, graph: Graph) -> str:
    metrics = compute_metrics(graph)
    return (
        f"Example graph - {EXAMPLE_DESCRIPTIONS[kind]}: "
        f"{metrics.node_count} nodes, {metrics.edge_count} edges."
    )


# ---------------------------------------------------------------- app bodies


class GenerateBody(BaseModel):
    node_count: int
    cluster_count: int = 1
    timestep_count: int = 1
    directed: bool = False
    attachment_edges: int = 1
    seed: int = 0


class SourceBody(BaseModel):
    citation: str
    scholar_url: str = ""
    study_node_range: tuple[int, int] | None = None
    study_density_range: tuple[float, float] | None = None


class GuidelineBody(BaseModel):
    id: str
    if_statement: str = Field(alias="if")
    then_statement: str = Field(alias="then")
    if_types: list[str]
    graph_types: list[str]
    decision_path: list[str]
    vis_type: str = "node_link"
    tasks: list[str]
    sources: list[SourceBody] = []
    mapping: str | None = None

    model_config = {"populate_by_name": True}


def create_app(
    registry: GuidelineRegistry | None = None,
    registry_path: str | Path | None = None,
    session_cap: int = config.SESSION_GRAPH_CAP,
) -> FastAPI:
    if registry is None:
        if registry_path is None:
            registry_path = os.environ.get(config.REGISTRY_ENV_VAR) or None
        registry = GuidelineRegistry.load(registry_path)

    app = FastAPI(title="graphguide", version="0.1.0")
    store = SessionStore(cap=session_cap)
    app.state.registry = registry
    app.state.store = store

    @app.exception_handler(NotFoundError)
    async def _not_found(_request: Request, exc: NotFoundError):
        return JSONResponse(status_code=404, content={"detail": f"unknown id: {exc.args[0]}"})

    @app.exception_handler(ConflictError)
    async def _conflict(_request: Request, exc: ConflictError):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(RecordValidationError)
    async def _invalid_record(_request: Request, exc: RecordValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(GraphmlError)
    async def _graphml_error(_request: Request, exc: GraphmlError):
        return JSONResponse(
            status_code=400,
            content={"detail": str(exc), "error": type(exc).__name__},
        )

    @app.exception_handler(GraphError)
    async def _graph_error(_request: Request, exc: GraphError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    def session_json(session: SessionGraph) -> dict:
        return {
            "graph_id": session.graph_id,
            "metrics": metrics_json(session.metrics),
            "description": session.description,
        }

    @app.post("/graphs/upload")
    async def upload_graph(request: Request):
        body = await request.body()
        graph = parse_graphml(body)
        return session_json(store.put(graph, describe_uploaded(graph)))

    @app.post("/graphs/generate")
    async def generate(body: GenerateBody):
        try:
            spec = GenerationSpec(**body.model_dump())
        except InvalidGenerationSpecError as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        graph = generate_graph(spec)
        return session_json(store.put(graph, describe_generated(graph, spec)))

    @app.get("/graphs/examples")
    async def examples():
        return [
            {"kind": kind.value, "description": text}
            for kind, text in EXAMPLE_DESCRIPTIONS.items()
        ]

    @app.get("/graphs/examples/{kind}")
    async def instantiate_example(kind: str):
        try:
            tag = GraphTypeTag(kind)
        except ValueError:
            raise NotFoundError(kind) from None
        graph = example_graph(tag)
        return session_json(store.put(graph, describe_example(tag, graph)))

    @app.get("/graphs/{graph_id}")
    async def graph_info(graph_id: str):
        return session_json(store.get(graph_id))

    @app.get("/graphs/{graph_id}/render")
    async def render_graph(
        graph_id: str,
        guideline: str,
        combine: str = "",
        seed: int = 42,
    ):
        session = store.get(graph_id)
        combined = [part for part in combine.split(",") if part]
        violations = validate_combination(registry, guideline, combined, session.metrics)
        if violations:
            return JSONResponse(
                status_code=409,
                content={
                    "detail": "combination rejected",
                    "violations": [
                        {"rule": v.rule, "guideline_ids": list(v.guideline_ids), "message": v.message}
                        for v in violations
                    ],
                },
            )
        plan = compose(registry, guideline, combined, session.metrics)
        try:
            scene = render(
                session.graph,
                plan,
                RenderOptions(seed=seed),
                applied=applied_from_registry(registry, plan),
            )
        except (SlotConflictError, PlanGraphMismatchError, MissingDataError) as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})
        return Response(content=scene_to_svg(scene), media_type=SVG_MEDIA)

    @app.get("/guidelines")
    async def guidelines(
        perspective: str = Query("decision"),
        grouping: str = Query("none"),
        graph: str | None = Query(None),
    ):
        try:
            p = Perspective(perspective)
            g = Grouping(grouping)
        except ValueError as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        metrics = store.get(graph).metrics if graph else None
        return view_json(registry.list_guidelines(p, g, metrics))

    @app.get("/guidelines/{guideline_id}")
    async def guideline_details(guideline_id: str):
        return record_json(registry.guideline_details(guideline_id))

    @app.get("/guidelines/{guideline_id}/preview")
    async def guideline_preview(guideline_id: str):
        record = registry.guideline_details(guideline_id)
        return Response(content=scene_to_svg(render_preview(record)), media_type=SVG_MEDIA)

    def _record_from_body(body: GuidelineBody) -> GuidelineRecord:
        return record_from_dict(
            {
                "id": body.id,
                "if": body.if_statement,
                "then": body.then_statement,
                "if_types": body.if_types,
                "graph_types": body.graph_types,
                "decision_path": body.decision_path,
                "vis_type": body.vis_type,
                "tasks": body.tasks,
                "sources": [s.model_dump() for s in body.sources],
                "mapping": body.mapping,
            }
        )

    @app.post("/guidelines", status_code=201)
    async def add_guideline(body: GuidelineBody):
        return {"id": registry.add_guideline(_record_from_body(body))}

    @app.put("/guidelines/{guideline_id}")
    async def replace_guideline(guideline_id: str, body: GuidelineBody):
        # the edit operation: full-record replacement
        if body.id != guideline_id:
            return JSONResponse(
                status_code=400,
                content={"detail": "record id must match the path id"},
            )
        return {"id": registry.replace_guideline(_record_from_body(body))}

    @app.get("/analytics")
    async def analytics():
        return analytics_json(registry.corpus_analytics())

    frontend = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if frontend.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(frontend), html=True), name="ui")

    return app


def run(host: str = "127.0.0.1", port: int = 8000,
        registry_path: str | Path | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(registry_path=registry_path), host=host, port=port)
