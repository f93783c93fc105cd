"""graphguide: match graphs against actionable visualization guidelines,
validate guideline combinations, and render the result."""

from .combine import (
    InvalidCombinationError,
    RenderPlan,
    SlotConflictError,
    Violation,
    compose,
    validate_combination,
)
from .examples import example_graph, use_case_graph
from .generate import generate_graph
from .graphml import parse_graphml, write_graphml
from .guidelines import GuidelineRecord, StudySource, VisType
from .metrics import compute_metrics
from .model import (
    DegenerateGraphError,
    Edge,
    GenerationSpec,
    Graph,
    GraphMetrics,
    GraphTypeTag,
    Node,
)
from .registry import (
    ConflictError,
    Grouping,
    GuidelineRegistry,
    NotFoundError,
    Perspective,
    TaxonomyView,
)
from .rendering import RenderOptions, render, render_preview
from .suitability import (
    CriterionStatus,
    Suitability,
    SuitabilityAssessment,
    assess,
    assess_all,
)
from .svg import scene_to_svg

__version__ = "0.1.0"

__all__ = [
    "ConflictError",
    "CriterionStatus",
    "DegenerateGraphError",
    "Edge",
    "GenerationSpec",
    "Graph",
    "GraphMetrics",
    "GraphTypeTag",
    "Grouping",
    "GuidelineRecord",
    "GuidelineRegistry",
    "InvalidCombinationError",
    "Node",
    "NotFoundError",
    "Perspective",
    "RenderOptions",
    "RenderPlan",
    "SlotConflictError",
    "StudySource",
    "Suitability",
    "SuitabilityAssessment",
    "TaxonomyView",
    "VisType",
    "Violation",
    "assess",
    "assess_all",
    "compose",
    "compute_metrics",
    "example_graph",
    "generate_graph",
    "parse_graphml",
    "render",
    "render_preview",
    "scene_to_svg",
    "use_case_graph",
    "validate_combination",
    "write_graphml",
]
