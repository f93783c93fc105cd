"""Guideline registry: storage, taxonomy views, analytics, persistence.

The registry holds :class:`~graphguide.guidelines.GuidelineRecord` objects
and serves them as trees under four perspectives:

* ``decision`` — by the visualization decision the guideline informs
* ``graph_type`` — by the graph types it was formulated for (a record
  appears once per declared type, the only perspective with multi-placement)
* ``if_type`` — by the kind of its if-condition
* ``task`` — by the tasks it was studied with

For the last two a record carries a *set* of classifications but is placed
exactly once, under its canonically first one, so every perspective
enumerates each record exactly once. Views only contain categories that
actually hold records.

Persistence is one human-editable YAML file (see docs/registry-format.md),
loaded at startup and rewritten atomically on every accepted addition.
"""

from __future__ import annotations

import os
import statistics
import tempfile
import threading
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

import yaml

from . import mappingdefs
from .guidelines import (
    GuidelineRecord,
    RecordValidationError,
    StudySource,
    VisType,
    normalize_statement,
)
from .model import GraphMetrics, GraphTypeTag
from .suitability import Suitability, SuitabilityAssessment, assess
from .taxonomy import DECISION_TREE, IF_TYPE_ORDER, IfType, TASK_TREE, task_order


class Perspective(str, Enum):
    DECISION = "decision"
    GRAPH_TYPE = "graph_type"
    IF_TYPE = "if_type"
    TASK = "task"


class Grouping(str, Enum):
    NONE = "none"
    SAME_IF = "same_if"
    SAME_THEN = "same_then"


class NotFoundError(KeyError):
    """Unknown guideline id."""


class ConflictError(ValueError):
    """Guideline id already registered."""


@dataclass(frozen=True)
class ViewEntry:
    record: GuidelineRecord
    assessment: SuitabilityAssessment | None


@dataclass
class CategoryNode:
    name: str
    children: list["CategoryNode"] = field(default_factory=list)
    entries: list[ViewEntry] = field(default_factory=list)
    groups: list[list[ViewEntry]] = field(default_factory=list)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class TaxonomyView:
    perspective: Perspective
    grouping: Grouping
    roots: tuple[CategoryNode, ...]

    def all_entries(self) -> list[ViewEntry]:
        return [entry for root in self.roots for node in root.walk() for entry in node.entries]


@dataclass(frozen=True)
class AnalyticsReport:
    """Corpus-level counts used to spot under-researched areas."""

    guideline_count: int
    decision_category_counts: dict[str, int]
    task_histogram: dict[str, int]
    graph_type_counts: dict[str, int]
    study_node_midpoints: tuple[float, ...]
    node_midpoint_min: float | None
    node_midpoint_median: float | None
    node_midpoint_max: float | None
    max_study_node_count: int | None


_SUMMARY_RANK = {
    Suitability.WELL_SUITED: 0,
    Suitability.MEDIUM: 1,
    Suitability.NOT_SUITED: 2,
}


class GuidelineRegistry:
    """Read-mostly store; additions are serialized through one writer lock."""

    def __init__(self, records: list[GuidelineRecord], path: Path | None = None):
        self._lock = threading.Lock()
        self._records: dict[str, GuidelineRecord] = {}
        self._path = Path(path) if path is not None else None
        for record in records:
            if record.id in self._records:
                raise ConflictError(f"duplicate guideline id {record.id!r}")
            self._records[record.id] = record
            if record.mapping_id is None:
                stub_id = mappingdefs.register_stub(record.id)
                self._records[record.id] = _with_mapping(record, stub_id)

    # ------------------------------------------------------------------ load

    @classmethod
    def load(cls, path: str | Path | None = None) -> "GuidelineRegistry":
        """Load from a registry file; with no path, load the packaged seed
        corpus (in-memory only: additions then do not persist)."""
        if path is None:
            text = resources.files("graphguide.data").joinpath("guidelines.yaml").read_text("utf-8")
            return cls(_records_from_yaml(text))
        path = Path(path)
        if path.exists():
            return cls(_records_from_yaml(path.read_text("utf-8")), path=path)
        # Fresh file: start from the seed corpus and persist it there.
        text = resources.files("graphguide.data").joinpath("guidelines.yaml").read_text("utf-8")
        registry = cls(_records_from_yaml(text), path=path)
        registry._rewrite()
        return registry

    # ----------------------------------------------------------------- reads

    def ids(self) -> tuple[str, ...]:
        return tuple(self._records)

    def records(self) -> tuple[GuidelineRecord, ...]:
        return tuple(self._records.values())

    def guideline_details(self, guideline_id: str) -> GuidelineRecord:
        try:
            return self._records[guideline_id]
        except KeyError:
            raise NotFoundError(guideline_id) from None

    def list_guidelines(
        self,
        perspective: Perspective = Perspective.DECISION,
        grouping: Grouping = Grouping.NONE,
        metrics: GraphMetrics | None = None,
    ) -> TaxonomyView:
        perspective = Perspective(perspective)
        grouping = Grouping(grouping)
        placements = self._placements(perspective)
        roots: list[CategoryNode] = []
        for top, subtree in placements:
            node = self._build_node(top, subtree, grouping, metrics)
            if node is not None:
                roots.append(node)
        return TaxonomyView(perspective=perspective, grouping=grouping, roots=tuple(roots))

    def _placements(self, perspective: Perspective):
        """Ordered (top-category, {subcategory-or-'': records}) pairs."""
        records = list(self._records.values())
        if perspective is Perspective.DECISION:
            order = list(DECISION_TREE)
            buckets: dict[str, dict[str, list[GuidelineRecord]]] = {t: {} for t in order}
            for record in records:
                top = record.decision_path[0]
                sub = record.decision_path[1] if len(record.decision_path) > 1 else ""
                buckets[top].setdefault(sub, []).append(record)
            sub_order = {t: ("",) + DECISION_TREE[t] for t in order}
        elif perspective is Perspective.GRAPH_TYPE:
            order = [t.value for t in GraphTypeTag]
            buckets = {t: {} for t in order}
            for record in records:
                for tag in record.graph_types:
                    buckets[tag.value].setdefault("", []).append(record)
            sub_order = {t: ("",) for t in order}
        elif perspective is Perspective.IF_TYPE:
            order = [t.value for t in IF_TYPE_ORDER]
            buckets = {t: {} for t in order}
            for record in records:
                first = min(record.if_types, key=IF_TYPE_ORDER.index, default=None)
                if first is None:
                    continue
                buckets[first.value].setdefault("", []).append(record)
            sub_order = {t: ("",) for t in order}
        else:  # TASK
            order = list(TASK_TREE)
            buckets = {t: {} for t in order}
            for record in records:
                first = min(record.tasks, key=task_order, default=None)
                if first is None:
                    continue
                top, _, sub = first.partition(".")
                buckets[top].setdefault(sub, []).append(record)
            sub_order = {t: ("",) + TASK_TREE[t] for t in order}
        return [(top, (buckets[top], sub_order[top])) for top in order]

    def _build_node(self, name, subtree, grouping, metrics) -> CategoryNode | None:
        buckets, sub_order = subtree
        node = CategoryNode(name=name)
        direct = buckets.get("", [])
        node.entries, node.groups = self._arrange(direct, grouping, metrics)
        for sub in sub_order:
            if not sub or sub not in buckets:
                continue
            child = CategoryNode(name=sub)
            child.entries, child.groups = self._arrange(buckets[sub], grouping, metrics)
            if child.entries:
                node.children.append(child)
        if not node.entries and not node.children:
            return None
        return node

    def _arrange(self, records, grouping, metrics):
        entries = [
            ViewEntry(record=r, assessment=assess(r, metrics) if metrics is not None else None)
            for r in records
        ]

        def rank(entry: ViewEntry):
            summary = _SUMMARY_RANK[entry.assessment.summary] if entry.assessment else 0
            return (summary, entry.record.id)

        entries.sort(key=rank)
        if grouping is Grouping.NONE:
            return entries, [[entry] for entry in entries]
        keyed: dict[str, list[ViewEntry]] = {}
        for entry in entries:
            statement = (
                entry.record.if_statement
                if grouping is Grouping.SAME_IF
                else entry.record.then_statement
            )
            keyed.setdefault(normalize_statement(statement), []).append(entry)
        groups = sorted(keyed.values(), key=lambda group: rank(group[0]))
        ordered = [entry for group in groups for entry in group]
        return ordered, groups

    # ---------------------------------------------------------------- writes

    def add_guideline(self, record: GuidelineRecord) -> str:
        """Validate, persist, and expose a new record; returns its id.

        A record without a mapping gets a stub mapping that renders the
        graph unchanged and flags itself unimplemented.
        """
        if record.mapping_id is not None and not mappingdefs.has_mapping(record.mapping_id):
            raise RecordValidationError(f"{record.id}: unknown mapping {record.mapping_id!r}")
        with self._lock:
            if record.id in self._records:
                raise ConflictError(f"guideline id {record.id!r} already registered")
            if record.mapping_id is None:
                record = _with_mapping(record, mappingdefs.register_stub(record.id))
            self._records[record.id] = record
            if self._path is not None:
                self._rewrite()
        return record.id

    def replace_guideline(self, record: GuidelineRecord) -> str:
        """Full-record replacement (the edit operation)."""
        if record.mapping_id is not None and not mappingdefs.has_mapping(record.mapping_id):
            raise RecordValidationError(f"{record.id}: unknown mapping {record.mapping_id!r}")
        with self._lock:
            if record.id not in self._records:
                raise NotFoundError(record.id)
            if record.mapping_id is None:
                record = _with_mapping(record, mappingdefs.register_stub(record.id))
            self._records[record.id] = record
            if self._path is not None:
                self._rewrite()
        return record.id

    def _rewrite(self) -> None:
        assert self._path is not None
        payload = yaml.safe_dump(
            {"records": [_record_to_dict(r) for r in self._records.values()]},
            sort_keys=False,
            allow_unicode=True,
        )
        fd, tmp = tempfile.mkstemp(dir=str(self._path.parent), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
            os.replace(tmp, self._path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    # ------------------------------------------------------------- analytics

    def corpus_analytics(self) -> AnalyticsReport:
        records = list(self._records.values())
        category_counts: dict[str, int] = {}
        task_histogram: dict[str, int] = {}
        graph_type_counts: dict[str, int] = {}
        midpoints: list[float] = []
        max_nodes: int | None = None
        for record in records:
            top = record.decision_path[0]
            category_counts[top] = category_counts.get(top, 0) + 1
            for tag in sorted(record.tasks, key=task_order):
                task_histogram[tag] = task_histogram.get(tag, 0) + 1
            for gtype in sorted(record.graph_types, key=lambda t: t.value):
                graph_type_counts[gtype.value] = graph_type_counts.get(gtype.value, 0) + 1
            for source in record.sources:
                if source.study_node_range is not None:
                    lo, hi = source.study_node_range
                    midpoints.append((lo + hi) / 2)
                    max_nodes = hi if max_nodes is None else max(max_nodes, hi)
        return AnalyticsReport(
            guideline_count=len(records),
            decision_category_counts=category_counts,
            task_histogram=task_histogram,
            graph_type_counts=graph_type_counts,
            study_node_midpoints=tuple(midpoints),
            node_midpoint_min=min(midpoints) if midpoints else None,
            node_midpoint_median=statistics.median(midpoints) if midpoints else None,
            node_midpoint_max=max(midpoints) if midpoints else None,
            max_study_node_count=max_nodes,
        )


def _with_mapping(record: GuidelineRecord, mapping_id: str) -> GuidelineRecord:
    return GuidelineRecord(
        id=record.id,
        if_statement=record.if_statement,
        then_statement=record.then_statement,
        if_types=record.if_types,
        graph_types=record.graph_types,
        decision_path=record.decision_path,
        vis_type=record.vis_type,
        tasks=record.tasks,
        sources=record.sources,
        mapping_id=mapping_id,
    )


# ------------------------------------------------------------- file format


def record_from_dict(data: dict) -> GuidelineRecord:
    """Build a record from the registry-file shape (also the HTTP shape)."""
    try:
        sources = []
        for raw in data.get("sources", []):
            sources.append(
                StudySource(
                    citation=raw["citation"],
                    scholar_url=raw.get("scholar_url", ""),
                    study_node_range=_int_pair(raw.get("study_node_range")),
                    study_density_range=_float_pair(raw.get("study_density_range")),
                )
            )
        return GuidelineRecord(
            id=data["id"],
            if_statement=data["if"],
            then_statement=data["then"],
            if_types=frozenset(IfType(v) for v in data.get("if_types", [])),
            graph_types=frozenset(GraphTypeTag(v) for v in data["graph_types"]),
            decision_path=tuple(data["decision_path"]),
            vis_type=VisType(data.get("vis_type", "node_link")),
            tasks=frozenset(data.get("tasks", [])),
            sources=tuple(sources),
            mapping_id=data.get("mapping"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, RecordValidationError):
            raise
        raise RecordValidationError(f"bad record {data.get('id', '?')!r}: {exc}") from exc


def _int_pair(raw) -> tuple[int, int] | None:
    return None if raw is None else (int(raw[0]), int(raw[1]))


def _float_pair(raw) -> tuple[float, float] | None:
    return None if raw is None else (float(raw[0]), float(raw[1]))


def _record_to_dict(record: GuidelineRecord) -> dict:
    data: dict = {
        "id": record.id,
        "if": record.if_statement,
        "then": record.then_statement,
        "if_types": sorted(t.value for t in record.if_types),
        "graph_types": sorted(t.value for t in record.graph_types),
        "decision_path": list(record.decision_path),
        "vis_type": record.vis_type.value,
        "tasks": sorted(record.tasks, key=task_order),
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
    }
    return data


def _records_from_yaml(text: str) -> list[GuidelineRecord]:
    try:
        payload = yaml.safe_load(text) or {}
    except yaml.YAMLError as exc:
        raise RecordValidationError(f"registry file is not valid YAML: {exc}") from exc
    if not isinstance(payload, dict) or not isinstance(payload.get("records", []), list):
        raise RecordValidationError("registry file must hold a 'records' list")
    return [record_from_dict(raw) for raw in payload.get("records", [])]
