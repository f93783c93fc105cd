"""Catalogue of visual mappings and the render slot each one occupies.

Composition assigns every mapping to one slot kind: ``layout`` and
``edge_style`` are exclusive (at most one each per plan), ``overlay`` and
``annotation`` accumulate. Stub mappings (auto-registered for user-added
guidelines that nobody has implemented yet) are annotations that leave the
graph unchanged and flag themselves unimplemented.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum


class MappingKind(str, Enum):
    LAYOUT = "layout"
    EDGE_STYLE = "edge_style"
    OVERLAY = "overlay"
    ANNOTATION = "annotation"


@dataclass(frozen=True)
class MappingSpec:
    id: str
    kind: MappingKind
    implemented: bool = True
    # None = any graph; True/False = requires directed/undirected.
    requires_directed: bool | None = None


BUILTIN_MAPPINGS: tuple[MappingSpec, ...] = (
    MappingSpec("force_directed_layout", MappingKind.LAYOUT),
    MappingSpec("overloaded_orthogonal_layout", MappingKind.LAYOUT, requires_directed=True),
    MappingSpec("crossing_angle_layout", MappingKind.LAYOUT),
    MappingSpec("mental_map_layout", MappingKind.LAYOUT),
    MappingSpec("adjacency_matrix", MappingKind.LAYOUT),
    MappingSpec("tapered_edges", MappingKind.EDGE_STYLE, requires_directed=True),
    MappingSpec("partially_drawn_edges", MappingKind.EDGE_STYLE, requires_directed=True),
    MappingSpec("curved_edges", MappingKind.EDGE_STYLE, requires_directed=False),
    MappingSpec("animated_pattern_edges", MappingKind.EDGE_STYLE, requires_directed=True),
    MappingSpec("convex_hull_overlay", MappingKind.OVERLAY),
    MappingSpec("bubble_sets_overlay", MappingKind.OVERLAY),
    MappingSpec("edge_bar_charts", MappingKind.OVERLAY),
    MappingSpec("node_treemap_glyphs", MappingKind.ANNOTATION),
    MappingSpec("small_multiples_mode", MappingKind.ANNOTATION),
)

_lock = threading.Lock()
_mappings: dict[str, MappingSpec] = {spec.id: spec for spec in BUILTIN_MAPPINGS}


class UnknownMappingError(KeyError):
    pass


def mapping_spec(mapping_id: str) -> MappingSpec:
    try:
        return _mappings[mapping_id]
    except KeyError:
        raise UnknownMappingError(mapping_id) from None


def has_mapping(mapping_id: str) -> bool:
    return mapping_id in _mappings


def register_stub(guideline_id: str) -> str:
    """Register (idempotently) the no-op mapping for an unimplemented guideline."""
    stub_id = f"stub:{guideline_id}"
    with _lock:
        _mappings.setdefault(stub_id, MappingSpec(stub_id, MappingKind.ANNOTATION, implemented=False))
    return stub_id
