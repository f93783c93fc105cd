"""Renderer output model: a flat, ordered list of drawing primitives.

Draw order is background overlays, then edges, then nodes, then labels; the
renderer appends in that order and the SVG writer emits in list order.
Primitives carry an optional ``tag`` (emitted as the SVG class attribute) so
tests and the UI can find them without geometry heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

Point = tuple[float, float]


@dataclass(frozen=True)
class Style:
    fill: str | None = None
    stroke: str | None = None
    stroke_width: float | None = None
    opacity: float | None = None
    dash: tuple[float, ...] | None = None
    # Seconds for one dash-offset cycle; emitted as a declarative SVG
    # animation and mirrored in the scene metadata for the UI.
    dash_cycle: float | None = None


@dataclass(frozen=True)
class Polyline:
    points: tuple[Point, ...]
    style: Style
    tag: str | None = None


@dataclass(frozen=True)
class Polygon:
    points: tuple[Point, ...]
    style: Style
    tag: str | None = None


@dataclass(frozen=True)
class QuadraticCurve:
    start: Point
    control: Point
    end: Point
    style: Style
    tag: str | None = None


@dataclass(frozen=True)
class CircleMark:
    center: Point
    radius: float
    style: Style
    tag: str | None = None


@dataclass(frozen=True)
class RectMark:
    x: float
    y: float
    width: float
    height: float
    style: Style
    tag: str | None = None


@dataclass(frozen=True)
class TextMark:
    position: Point
    content: str
    size: float
    style: Style
    anchor: str = "middle"
    tag: str | None = None


Primitive = Polyline | Polygon | QuadraticCurve | CircleMark | RectMark | TextMark


@dataclass(frozen=True)
class AppliedGuideline:
    guideline_id: str
    statement: str
    unimplemented: bool = False


@dataclass(frozen=True)
class FrameInfo:
    """One time slice of a dynamic render: where its sub-scene sits and the
    layout-space node positions it used."""

    timestep: int
    origin: Point
    scale: float
    positions: dict[str, Point]


@dataclass(frozen=True)
class SceneMetadata:
    applied: tuple[AppliedGuideline, ...] = ()
    animation_cycle: float | None = None
    frames: tuple[FrameInfo, ...] = ()


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    primitives: tuple[Primitive, ...]
    metadata: SceneMetadata = field(default_factory=SceneMetadata)

    def __post_init__(self):
        for primitive in self.primitives:
            for point in _points_of(primitive):
                if not (math.isfinite(point[0]) and math.isfinite(point[1])):
                    raise ValueError(f"non-finite coordinate in {type(primitive).__name__}")

    def tagged(self, prefix: str) -> list[Primitive]:
        return [p for p in self.primitives if p.tag is not None and p.tag.startswith(prefix)]


def _points_of(primitive: Primitive) -> tuple[Point, ...]:
    if isinstance(primitive, (Polyline, Polygon)):
        return primitive.points
    if isinstance(primitive, QuadraticCurve):
        return (primitive.start, primitive.control, primitive.end)
    if isinstance(primitive, CircleMark):
        return (primitive.center,)
    if isinstance(primitive, RectMark):
        return ((primitive.x, primitive.y), (primitive.x + primitive.width, primitive.y + primitive.height))
    return (primitive.position,)
