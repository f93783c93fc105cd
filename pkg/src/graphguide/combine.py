"""Combination rules and render-plan composition.

A plan is one main guideline plus zero or more combined guidelines. A
combination is valid when:

    R1  all entries share at least one declared graph type, and that shared
        type is compatible with the current graph
    R2  entries sit in pairwise distinct decision-tree leaf categories
        (the one perspective whose categories map to disjoint visual
        channels; browsing perspective never changes combinability)
    R3  all entries target the same visualization type (node-link and
        matrix guidelines are never combinable)
    R4  every entry is individually applicable to the current graph

Validation reports *all* violated rules with the offending entries.
Composition then assigns each guideline's mapping to its slot; two mappings
claiming the same exclusive slot is a :class:`SlotConflictError`, reported
rather than silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .guidelines import GuidelineRecord
from .mappingdefs import MappingKind, mapping_spec
from .model import GraphMetrics, type_closure
from .registry import GuidelineRegistry, NotFoundError
from .suitability import assess


@dataclass(frozen=True)
class Violation:
    rule: str            # "R1" .. "R4"
    guideline_ids: tuple[str, ...]
    message: str


class SlotConflictError(ValueError):
    """Two mappings in one plan claim the same exclusive slot."""

    def __init__(self, slot: str, mapping_ids: tuple[str, ...], guideline_ids: tuple[str, ...]):
        ids = ", ".join(guideline_ids)
        super().__init__(f"guidelines {ids} both need the exclusive {slot} slot")
        self.slot = slot
        self.mapping_ids = mapping_ids
        self.guideline_ids = guideline_ids


class InvalidCombinationError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        super().__init__("; ".join(f"{v.rule}: {v.message}" for v in violations))
        self.violations = tuple(violations)


@dataclass(frozen=True)
class RenderPlan:
    """A validated composition, resolved to render slots.

    ``layout_mapping`` is None when the plan relies on the default layout
    (force-directed). Overlay and annotation mapping ids keep the order
    main-first, combined in user order.
    """

    main: str
    combined: tuple[str, ...]
    layout_mapping: str | None
    edge_style_mapping: str | None
    overlay_mappings: tuple[str, ...]
    annotation_mappings: tuple[str, ...]

    def guideline_ids(self) -> tuple[str, ...]:
        return (self.main, *self.combined)


def _resolve(registry: GuidelineRegistry, main: str, combined: Sequence[str]):
    records = [registry.guideline_details(main)]
    for guideline_id in combined:
        records.append(registry.guideline_details(guideline_id))
    return records


def validate_combination(
    registry: GuidelineRegistry,
    main: str,
    combined: Sequence[str],
    metrics: GraphMetrics,
) -> list[Violation]:
    """All rule violations for the proposed combination; empty means valid.

    Raises :class:`~graphguide.registry.NotFoundError` for unknown ids. The
    result is independent of the order of ``combined``.
    """
    records = _resolve(registry, main, combined)
    violations: list[Violation] = []

    compatible = type_closure(metrics.detected_types)
    shared = frozenset.intersection(*(r.graph_types for r in records))
    if not (shared & compatible):
        ids = tuple(sorted(r.id for r in records))
        if shared:
            message = (
                "shared graph types "
                + "/".join(sorted(t.value for t in shared))
                + " do not fit the current graph"
            )
        else:
            message = "no graph type is shared by all guidelines"
        violations.append(Violation("R1", ids, message))

    by_category: dict[tuple[str, ...], list[str]] = {}
    for record in records:
        by_category.setdefault(record.decision_path, []).append(record.id)
    for path, ids in sorted(by_category.items()):
        if len(ids) > 1:
            violations.append(
                Violation(
                    "R2",
                    tuple(sorted(ids)),
                    f"same decision category [{', '.join(path)}]",
                )
            )

    main_vis = records[0].vis_type
    clashing = tuple(sorted(r.id for r in records if r.vis_type is not main_vis))
    if clashing:
        violations.append(
            Violation(
                "R3",
                (records[0].id, *clashing),
                "node-link and matrix guidelines are not combinable",
            )
        )

    for record in records:
        if not assess(record, metrics).applicable:
            violations.append(
                Violation("R4", (record.id,), f"{record.id} is not applicable to this graph")
            )

    return violations


def compose(
    registry: GuidelineRegistry,
    main: str,
    combined: Sequence[str],
    metrics: GraphMetrics,
) -> RenderPlan:
    """Build the render plan for a valid combination.

    Requires :func:`validate_combination` to have come back clean; raises
    :class:`InvalidCombinationError` otherwise and :class:`SlotConflictError`
    when mapping kinds collide on an exclusive slot.
    """
    violations = validate_combination(registry, main, combined, metrics)
    if violations:
        raise InvalidCombinationError(violations)

    records = _resolve(registry, main, combined)
    layout: tuple[str, str] | None = None
    edge_style: tuple[str, str] | None = None
    overlays: list[str] = []
    annotations: list[str] = []
    for record in records:
        assert record.mapping_id is not None  # registry guarantees a stub at minimum
        spec = mapping_spec(record.mapping_id)
        if spec.kind is MappingKind.LAYOUT:
            if layout is not None:
                raise SlotConflictError(
                    "layout", (layout[1], record.mapping_id), (layout[0], record.id)
                )
            layout = (record.id, record.mapping_id)
        elif spec.kind is MappingKind.EDGE_STYLE:
            if edge_style is not None:
                raise SlotConflictError(
                    "edge-style", (edge_style[1], record.mapping_id), (edge_style[0], record.id)
                )
            edge_style = (record.id, record.mapping_id)
        elif spec.kind is MappingKind.OVERLAY:
            overlays.append(record.mapping_id)
        else:
            annotations.append(record.mapping_id)

    return RenderPlan(
        main=main,
        combined=tuple(combined),
        layout_mapping=layout[1] if layout else None,
        edge_style_mapping=edge_style[1] if edge_style else None,
        overlay_mappings=tuple(overlays),
        annotation_mappings=tuple(annotations),
    )
