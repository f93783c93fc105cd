"""Suitability scoring: how well a guideline fits a concrete graph.

Three criteria are checked: graph type (GT), node count (#N), and density
(#D). A graph-type mismatch makes the guideline inapplicable and the other
two criteria moot; otherwise #N and #D are tested against the ranges of the
guideline's backing studies, widened by a relative margin
(:data:`graphguide.config.SUITABILITY_RANGE_MARGIN`). A study with an
unknown range never matches. A criterion matches if any single source
matches it: each study independently evidences the guideline.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import config
from .guidelines import GuidelineRecord, StudySource
from .model import GraphMetrics, type_closure


class CriterionStatus(str, Enum):
    MATCH = "match"        # green
    NO_MATCH = "no_match"  # yellow: applicable, but outside studied ranges
    MISMATCH = "mismatch"  # orange: wrong graph type
    MOOT = "moot"          # #N/#D when the graph type already mismatched


class Suitability(str, Enum):
    WELL_SUITED = "well_suited"
    MEDIUM = "medium"
    NOT_SUITED = "not_suited"


@dataclass(frozen=True)
class SuitabilityAssessment:
    gt: CriterionStatus
    n: CriterionStatus
    d: CriterionStatus
    summary: Suitability
    applicable: bool

    def __post_init__(self):
        if self.gt not in (CriterionStatus.MATCH, CriterionStatus.MISMATCH):
            raise ValueError("gt must be match or mismatch")
        allowed = (
            (CriterionStatus.MOOT,)
            if self.gt is CriterionStatus.MISMATCH
            else (CriterionStatus.MATCH, CriterionStatus.NO_MATCH)
        )
        for name, status in (("n", self.n), ("d", self.d)):
            if status not in allowed:
                raise ValueError(f"{name}={status.value} invalid with gt={self.gt.value}")

    @classmethod
    def from_criteria(
        cls, gt: CriterionStatus, n: CriterionStatus, d: CriterionStatus
    ) -> "SuitabilityAssessment":
        if gt is CriterionStatus.MISMATCH:
            summary = Suitability.NOT_SUITED
        elif n is CriterionStatus.MATCH and d is CriterionStatus.MATCH:
            summary = Suitability.WELL_SUITED
        else:
            summary = Suitability.MEDIUM
        return cls(gt=gt, n=n, d=d, summary=summary, applicable=gt is CriterionStatus.MATCH)


def _range_matches(value: float, bounds: tuple[float, float] | None) -> bool:
    if bounds is None:
        return False
    lo, hi = bounds
    margin = config.SUITABILITY_RANGE_MARGIN
    return lo * (1 - margin) <= value <= hi * (1 + margin)


def _criterion(value: float, ranges: Iterable[tuple[float, float] | None]) -> CriterionStatus:
    for bounds in ranges:
        if _range_matches(value, bounds):
            return CriterionStatus.MATCH
    return CriterionStatus.NO_MATCH


def assess(guideline: GuidelineRecord, metrics: GraphMetrics) -> SuitabilityAssessment:
    """Score one guideline against one graph's metrics (pure function)."""
    compatible = type_closure(metrics.detected_types)
    if not (guideline.graph_types & compatible):
        return SuitabilityAssessment.from_criteria(
            CriterionStatus.MISMATCH, CriterionStatus.MOOT, CriterionStatus.MOOT
        )
    n = _criterion(metrics.node_count, (s.study_node_range for s in guideline.sources))
    d = _criterion(metrics.density, (s.study_density_range for s in guideline.sources))
    return SuitabilityAssessment.from_criteria(CriterionStatus.MATCH, n, d)


def assess_all(
    records: Sequence[GuidelineRecord], metrics: GraphMetrics
) -> list[tuple[str, SuitabilityAssessment]]:
    """Element-wise :func:`assess`, preserving input order."""
    return [(record.id, assess(record, metrics)) for record in records]
