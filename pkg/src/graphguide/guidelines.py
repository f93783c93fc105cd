"""Guideline records: the unit the registry stores.

A record is one actionable if-then statement together with its
classifications (decision path, graph types, if-types, tasks), the studies
that back it (citation, link, studied graph sizes/densities), and the id of
the visual mapping that implements it. Records whose mapping is a stub are
browsable but render the graph unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .model import GraphTypeTag
from .taxonomy import IfType, is_decision_path, is_task_tag


class VisType(str, Enum):
    NODE_LINK = "node_link"
    MATRIX = "matrix"


class RecordValidationError(ValueError):
    """A guideline record violates its invariants."""


@dataclass(frozen=True)
class StudySource:
    """One backing study. Unknown node/density ranges stay ``None``."""

    citation: str
    scholar_url: str
    study_node_range: tuple[int, int] | None = None
    study_density_range: tuple[float, float] | None = None

    def __post_init__(self):
        for name, rng in (("study_node_range", self.study_node_range),
                          ("study_density_range", self.study_density_range)):
            if rng is not None:
                lo, hi = rng
                if lo > hi:
                    raise RecordValidationError(f"{name}: min {lo} > max {hi}")
                if lo < 0:
                    raise RecordValidationError(f"{name}: negative bound {lo}")


@dataclass(frozen=True)
class GuidelineRecord:
    id: str
    if_statement: str
    then_statement: str
    if_types: frozenset[IfType]
    graph_types: frozenset[GraphTypeTag]
    decision_path: tuple[str, ...]
    vis_type: VisType
    tasks: frozenset[str]
    sources: tuple[StudySource, ...] = ()
    mapping_id: str | None = None

    def __post_init__(self):
        if not self.id:
            raise RecordValidationError("id must be nonempty")
        if not self.if_statement.strip() or not self.then_statement.strip():
            raise RecordValidationError(f"{self.id}: if/then statements must be nonempty")
        if not self.graph_types:
            raise RecordValidationError(f"{self.id}: graph_types must be nonempty")
        # Every perspective must be able to place the record somewhere.
        if not self.if_types:
            raise RecordValidationError(f"{self.id}: if_types must be nonempty")
        if not self.tasks:
            raise RecordValidationError(f"{self.id}: tasks must be nonempty")
        if not is_decision_path(self.decision_path):
            raise RecordValidationError(
                f"{self.id}: {list(self.decision_path)} is not a valid decision-tree path"
            )
        for tag in self.tasks:
            if not is_task_tag(tag):
                raise RecordValidationError(f"{self.id}: unknown task tag {tag!r}")

    @property
    def is_stub(self) -> bool:
        return self.mapping_id is None or self.mapping_id.startswith("stub:")


def normalize_statement(statement: str) -> str:
    """Case-folded, whitespace-collapsed form used for same-if/same-then grouping."""
    return " ".join(statement.casefold().split())
