"""Render a graph under a render plan to a deterministic scene.

The static pipeline is: pick node positions (layout slot, default
force-directed), draw background overlays (hulls, bubbles, edge bar charts),
then edges in the selected style, then nodes, then labels and the applied-
guideline banner. Dynamic graphs render one sub-scene per time slice in a
row-major grid; the mental-map layout computes positions once on the union
graph so every slice shows nodes in identical places.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import config
from .combine import RenderPlan
from .guidelines import GuidelineRecord
from .layouts import (
    LayoutResult,
    layout_force_directed,
    layout_overloaded_orthogonal,
)
from .mappingdefs import MappingKind, mapping_spec
from .model import Edge, Graph, GraphTypeTag, Node
from .registry import GuidelineRegistry
from .scene import (
    AppliedGuideline,
    CircleMark,
    FrameInfo,
    Point,
    Polygon,
    Polyline,
    Primitive,
    QuadraticCurve,
    RectMark,
    Scene,
    SceneMetadata,
    Style,
    TextMark,
)


class PlanGraphMismatchError(ValueError):
    """The plan contains a mapping the graph's directedness cannot support."""


class MissingDataError(ValueError):
    """A mapping needs data the graph does not carry (e.g. attribute vectors)."""


@dataclass(frozen=True)
class RenderOptions:
    seed: int = 42
    iterations: int = config.FORCE_ITERATIONS
    width: float = config.CANVAS_WIDTH
    height: float = config.CANVAS_HEIGHT
    partial_fraction: float = config.PARTIAL_EDGE_FRACTION
    banner: bool = True


def base_plan() -> RenderPlan:
    """Plan with every slot at its default (used for plain graph previews)."""
    return RenderPlan(
        main="", combined=(), layout_mapping=None, edge_style_mapping=None,
        overlay_mappings=(), annotation_mappings=(),
    )


def applied_from_registry(registry: GuidelineRegistry, plan: RenderPlan) -> tuple[AppliedGuideline, ...]:
    """Banner entries (statement text, unimplemented flag) for a plan."""
    applied = []
    for guideline_id in plan.guideline_ids():
        if not guideline_id:
            continue
        record = registry.guideline_details(guideline_id)
        applied.append(
            AppliedGuideline(
                guideline_id=guideline_id,
                statement=f"{record.if_statement}, then: {record.then_statement}",
                unimplemented=record.is_stub,
            )
        )
    return tuple(applied)


# --------------------------------------------------------------------- guard


def _check_plan_agreement(graph: Graph, plan: RenderPlan) -> None:
    mappings = [
        m
        for m in (
            plan.layout_mapping,
            plan.edge_style_mapping,
            *plan.overlay_mappings,
            *plan.annotation_mappings,
        )
        if m is not None
    ]
    for mapping_id in mappings:
        spec = mapping_spec(mapping_id)
        if spec.requires_directed is True and not graph.directed:
            raise PlanGraphMismatchError(f"{mapping_id} requires a directed graph")
        if spec.requires_directed is False and graph.directed:
            raise PlanGraphMismatchError(f"{mapping_id} requires an undirected graph")
    if plan.layout_mapping == "adjacency_matrix":
        if plan.edge_style_mapping is not None or plan.overlay_mappings:
            raise PlanGraphMismatchError(
                "matrix rendering cannot host node-link edge styles or overlays"
            )


# ------------------------------------------------------------------ geometry


def _convex_hull(points: list[Point]) -> list[Point]:
    """Andrew's monotone chain; returns the hull counter-clockwise (math axes).

    Collinear inputs collapse to their two extreme points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o: Point, a: Point, b: Point) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _scaled_hull(points: list[Point], padding: float) -> list[Point]:
    """Hull scaled outward about its centroid so the originals lie inside."""
    hull = _convex_hull(points)
    if len(hull) < 3:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        return [
            (min(xs) - padding, min(ys) - padding),
            (max(xs) + padding, min(ys) - padding),
            (max(xs) + padding, max(ys) + padding),
            (min(xs) - padding, max(ys) + padding),
        ]
    cx = sum(p[0] for p in hull) / len(hull)
    cy = sum(p[1] for p in hull) / len(hull)
    max_dist = max(math.hypot(p[0] - cx, p[1] - cy) for p in hull)
    factor = 1 + padding / max(max_dist, 1e-9)
    return [(cx + (p[0] - cx) * factor, cy + (p[1] - cy) * factor) for p in hull]


def _buffered_outline(points: list[Point], radius: float) -> list[Point]:
    """Closed outline at distance `radius` around the convex hull of `points`
    (offset edges joined by sampled arcs); a capsule or circle when the hull
    degenerates. Contains every disc of radius < `radius` centered on the
    input points."""
    hull = _convex_hull(points)
    step = math.radians(config.BUBBLE_ARC_STEP_DEGREES)
    if len(hull) == 1:
        cx, cy = hull[0]
        count = int(2 * math.pi / step)
        return [
            (cx + radius * math.cos(i * step), cy + radius * math.sin(i * step))
            for i in range(count)
        ]
    ring = hull + [hull[0]]  # 2 hull points degenerate into a capsule

    outline: list[Point] = []
    m = len(ring) - 1
    for i in range(m):
        p, q = ring[i], ring[i + 1]
        dx, dy = q[0] - p[0], q[1] - p[1]
        length = math.hypot(dx, dy)
        if length < 1e-9:
            continue
        # Outward normal of a CCW (math-orientation) polygon edge.
        nx, ny = dy / length, -dx / length
        outline.append((p[0] + nx * radius, p[1] + ny * radius))
        outline.append((q[0] + nx * radius, q[1] + ny * radius))
        # Arc around q to the next edge's offset start.
        r, s = ring[(i + 1) % m], ring[(i + 2) % m]
        dx2, dy2 = s[0] - r[0], s[1] - r[1]
        length2 = math.hypot(dx2, dy2)
        if length2 < 1e-9:
            continue
        nx2, ny2 = dy2 / length2, -dx2 / length2
        a0 = math.atan2(ny, nx)
        a1 = math.atan2(ny2, nx2)
        while a1 < a0:
            a1 += 2 * math.pi
        angle = a0 + step
        while angle < a1:
            outline.append((q[0] + radius * math.cos(angle), q[1] + radius * math.sin(angle)))
            angle += step
    return outline


def taper_strip(points: list[Point], max_width: float) -> list[list[Point]]:
    """Quad strip polygons tapering from `max_width` at the first point to
    zero at the last, one polygon per segment of the polyline."""
    total = sum(
        math.hypot(points[i + 1][0] - points[i][0], points[i + 1][1] - points[i][1])
        for i in range(len(points) - 1)
    )
    if total < 1e-9:
        return []
    polygons: list[list[Point]] = []
    covered = 0.0
    for i in range(len(points) - 1):
        p, q = points[i], points[i + 1]
        seg = math.hypot(q[0] - p[0], q[1] - p[1])
        if seg < 1e-9:
            continue
        w0 = max_width * (1 - covered / total) / 2
        covered += seg
        w1 = max_width * (1 - covered / total) / 2
        nx, ny = (q[1] - p[1]) / seg, -(q[0] - p[0]) / seg
        polygons.append(
            [
                (p[0] + nx * w0, p[1] + ny * w0),
                (q[0] + nx * w1, q[1] + ny * w1),
                (q[0] - nx * w1, q[1] - ny * w1),
                (p[0] - nx * w0, p[1] - ny * w0),
            ]
        )
    return polygons


def truncate_route(points: list[Point], fraction: float) -> list[Point]:
    """Prefix of a polyline covering `fraction` of its total length."""
    total = sum(
        math.hypot(points[i + 1][0] - points[i][0], points[i + 1][1] - points[i][1])
        for i in range(len(points) - 1)
    )
    budget = total * fraction
    out = [points[0]]
    for i in range(len(points) - 1):
        p, q = points[i], points[i + 1]
        seg = math.hypot(q[0] - p[0], q[1] - p[1])
        if seg < 1e-9:
            continue
        if budget >= seg:
            out.append(q)
            budget -= seg
        else:
            t = budget / seg
            out.append((p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t))
            break
    return out


def _clockwise_perpendicular(dx: float, dy: float) -> Point:
    # Screen orientation (y down): to the right of the travel direction.
    length = math.hypot(dx, dy)
    return (-dy / length, dx / length)


# ----------------------------------------------------------------- edge draw


def _edge_route(edge: Edge, layout: LayoutResult) -> list[Point]:
    if layout.routes is not None and edge.pair in layout.routes:
        return list(layout.routes[edge.pair])
    return [layout.positions[edge.source], layout.positions[edge.target]]


def _draw_edge(edge: Edge, route: list[Point], style_id: str | None, directed: bool,
               options: RenderOptions) -> list[Primitive]:
    tag = f"edge:{edge.source}:{edge.target}"
    stroke = Style(stroke=config.EDGE_STROKE, stroke_width=config.EDGE_WIDTH)

    if style_id == "tapered_edges":
        fill = Style(fill=config.EDGE_STROKE)
        return [
            Polygon(tuple(quad), fill, tag=tag)
            for quad in taper_strip(route, config.TAPER_MAX_WIDTH)
        ]
    if style_id == "partially_drawn_edges":
        stub = truncate_route(route, options.partial_fraction)
        return [Polyline(tuple(stub), stroke, tag=tag)]
    if style_id == "curved_edges":
        (sx, sy), (tx, ty) = route[0], route[-1]
        length = math.hypot(tx - sx, ty - sy)
        if length < 1e-9:
            return []
        px, py = _clockwise_perpendicular(tx - sx, ty - sy)
        offset = length * config.CURVE_OFFSET_FRACTION
        control = ((sx + tx) / 2 + px * offset, (sy + ty) / 2 + py * offset)
        return [QuadraticCurve((sx, sy), control, (tx, ty), stroke, tag=tag)]
    if style_id == "animated_pattern_edges":
        dashed = replace(stroke, dash=config.DASH_PATTERN, dash_cycle=config.DASH_CYCLE_SECONDS)
        return [Polyline(tuple(route), dashed, tag=tag)]

    # Default: plain line, with an arrowhead for directed graphs.
    primitives: list[Primitive] = [Polyline(tuple(route), stroke, tag=tag)]
    if directed:
        (px, py), (qx, qy) = route[-2], route[-1]
        seg = math.hypot(qx - px, qy - py)
        if seg > 1e-9:
            ux, uy = (qx - px) / seg, (qy - py) / seg
            tipx, tipy = qx - ux * config.NODE_RADIUS, qy - uy * config.NODE_RADIUS
            bx, by = tipx - ux * config.ARROW_HEAD_LENGTH, tipy - uy * config.ARROW_HEAD_LENGTH
            half = config.ARROW_HEAD_WIDTH / 2
            primitives.append(
                Polygon(
                    ((tipx, tipy), (bx - uy * half, by + ux * half), (bx + uy * half, by - ux * half)),
                    Style(fill=config.EDGE_STROKE),
                    tag=f"arrow:{edge.source}:{edge.target}",
                )
            )
    return primitives


# ------------------------------------------------------------------ overlays


def _node_groups(graph: Graph) -> dict[str, list[str]]:
    """Cluster-id groups when the graph has clusters; otherwise the single
    group of above-average-degree nodes (the strongly interlinked part)."""
    if graph.has_clusters():
        groups: dict[str, list[str]] = {}
        for node in graph.nodes:
            if node.cluster is not None:
                groups.setdefault(f"c{node.cluster}", []).append(node.id)
        return {name: members for name, members in sorted(groups.items()) if members}
    degree: dict[str, int] = {n.id: 0 for n in graph.nodes}
    for edge in graph.edges_at(0):
        degree[edge.source] += 1
        degree[edge.target] += 1
    if not degree:
        return {}
    mean = sum(degree.values()) / len(degree)
    dense = [node_id for node_id, d in sorted(degree.items()) if d > mean]
    return {"hubs": dense} if len(dense) >= 2 else {}


def _draw_overlays(graph: Graph, edges: tuple[Edge, ...], positions: dict[str, Point],
                   overlay_ids: tuple[str, ...]) -> list[Primitive]:
    primitives: list[Primitive] = []
    for overlay in overlay_ids:
        if overlay == "convex_hull_overlay":
            for name, members in _node_groups(graph).items():
                pts = [positions[m] for m in members]
                hull = _scaled_hull(pts, config.HULL_PADDING)
                primitives.append(
                    Polygon(
                        tuple(hull),
                        Style(fill=None, stroke=config.HULL_STROKE, stroke_width=2.0),
                        tag=f"hull:{name}",
                    )
                )
        elif overlay == "bubble_sets_overlay":
            for name, members in _node_groups(graph).items():
                pts = [positions[m] for m in members]
                outline = _buffered_outline(pts, config.BUBBLE_PADDING)
                primitives.append(
                    Polygon(
                        tuple(outline),
                        Style(fill=config.BUBBLE_FILL, opacity=config.BUBBLE_OPACITY),
                        tag=f"bubble:{name}",
                    )
                )
        elif overlay == "edge_bar_charts":
            attributed = [e for e in edges if e.attributes]
            if not attributed:
                raise MissingDataError(
                    "edge bar charts need edges with attribute vectors"
                )
            peak = max(max(e.attributes) for e in attributed)
            if peak <= 0:
                peak = 1.0
            for edge in attributed:
                mx = (positions[edge.source][0] + positions[edge.target][0]) / 2
                my = (positions[edge.source][1] + positions[edge.target][1]) / 2
                k = len(edge.attributes)
                x0 = mx - k * config.EDGE_BAR_WIDTH / 2
                for j, value in enumerate(edge.attributes):
                    h = max(value, 0.0) / peak * config.EDGE_BAR_MAX_HEIGHT
                    primitives.append(
                        RectMark(
                            x0 + j * config.EDGE_BAR_WIDTH, my - h,
                            config.EDGE_BAR_WIDTH - 1, h,
                            Style(fill=config.EDGE_BAR_FILL),
                            tag=f"edge-bars:{edge.source}:{edge.target}",
                        )
                    )
    return primitives


GLYPH_PALETTE = ("#4878a8", "#d9822b", "#5aa85a", "#a85a78")


def _draw_node(node: Node, point: Point, glyphs: bool, degree: int) -> list[Primitive]:
    if not glyphs:
        return [
            CircleMark(
                point, config.NODE_RADIUS,
                Style(fill=config.NODE_FILL, stroke=config.NODE_STROKE, stroke_width=1.0),
                tag=f"node:{node.id}",
            )
        ]
    side = config.NODE_RADIUS * 2.4
    x, y = point[0] - side / 2, point[1] - side / 2
    # Treemap-style quad: split by degree share, second level by cluster.
    fx = (degree + 1) / (degree + 3)
    fy = ((node.cluster or 0) % 3 + 1) / 4
    cells = (
        (x, y, side * fx, side * fy),
        (x + side * fx, y, side * (1 - fx), side * fy),
        (x, y + side * fy, side * fx, side * (1 - fy)),
        (x + side * fx, y + side * fy, side * (1 - fx), side * (1 - fy)),
    )
    return [
        RectMark(cx, cy, cw, ch, Style(fill=GLYPH_PALETTE[i], stroke="#ffffff", stroke_width=0.5),
                 tag=f"node:{node.id}")
        for i, (cx, cy, cw, ch) in enumerate(cells)
    ]


# -------------------------------------------------------------- static scene


def _static_primitives(graph: Graph, edges: tuple[Edge, ...], plan: RenderPlan,
                       options: RenderOptions,
                       layout: LayoutResult) -> list[Primitive]:
    positions = layout.positions
    primitives: list[Primitive] = []
    primitives.extend(_draw_overlays(graph, edges, positions, plan.overlay_mappings))

    for edge in edges:
        route = _edge_route(edge, layout)
        primitives.extend(
            _draw_edge(edge, route, plan.edge_style_mapping, graph.directed, options)
        )

    glyphs = "node_treemap_glyphs" in plan.annotation_mappings
    degree: dict[str, int] = {n.id: 0 for n in graph.nodes}
    for edge in edges:
        degree[edge.source] += 1
        degree[edge.target] += 1
    for node in graph.nodes:
        primitives.extend(_draw_node(node, positions[node.id], glyphs, degree[node.id]))

    for node in graph.nodes:
        if node.label:
            x, y = positions[node.id]
            primitives.append(
                TextMark(
                    (x, y - config.NODE_RADIUS - 4), node.label,
                    config.LABEL_FONT_SIZE, Style(fill="#222222"),
                    tag=f"label:{node.id}",
                )
            )
    return primitives


def _matrix_primitives(graph: Graph, edges: tuple[Edge, ...],
                       options: RenderOptions) -> list[Primitive]:
    ids = list(graph.node_ids)
    n = len(ids)
    if n == 0:
        return []
    size = min(options.width, options.height) * (1 - 2 * config.CANVAS_MARGIN_FRACTION)
    cell = size / (n + 1)  # +1 row/column for the id labels
    ox = (options.width - size) / 2
    oy = (options.height - size) / 2
    index = {node_id: i for i, node_id in enumerate(ids)}

    filled: set[tuple[int, int]] = set()
    for edge in edges:
        i, j = index[edge.source], index[edge.target]
        filled.add((i, j))
        if not graph.directed:
            filled.add((j, i))

    primitives: list[Primitive] = []
    grid_style = Style(fill="#f2f2f2", stroke="#cccccc", stroke_width=0.5)
    cell_style = Style(fill="#30507a")
    for i, source in enumerate(ids):
        for j, target in enumerate(ids):
            x = ox + (j + 1) * cell
            y = oy + (i + 1) * cell
            if (i, j) in filled:
                primitives.append(
                    RectMark(x, y, cell, cell, cell_style, tag=f"matrix-cell:{source}:{target}")
                )
            else:
                primitives.append(RectMark(x, y, cell, cell, grid_style))
    label_style = Style(fill="#222222")
    font = min(config.LABEL_FONT_SIZE, cell * 0.6)
    for i, node_id in enumerate(ids):
        primitives.append(
            TextMark((ox + cell / 2, oy + (i + 1.5) * cell), node_id, font, label_style,
                     tag=f"matrix-row:{node_id}")
        )
        primitives.append(
            TextMark((ox + (i + 1.5) * cell, oy + cell / 2), node_id, font, label_style,
                     tag=f"matrix-col:{node_id}")
        )
    return primitives


def _layout_for(graph: Graph, edges: tuple[Edge, ...], plan: RenderPlan,
                options: RenderOptions) -> LayoutResult:
    mapping = plan.layout_mapping
    if mapping == "overloaded_orthogonal_layout":
        return layout_overloaded_orthogonal(graph, options.width, options.height)
    if mapping == "mental_map_layout":
        # Union layout: every slice's edges attract, positions frozen across time.
        return layout_force_directed(
            graph, options.seed, options.iterations, options.width, options.height,
        )
    if mapping == "crossing_angle_layout":
        # Readability-tuned spring layout: longer run spreads crossings apart
        # and widens their angles.
        return layout_force_directed(
            graph, options.seed, options.iterations * 2, options.width, options.height,
            edges=edges,
        )
    return layout_force_directed(
        graph, options.seed, options.iterations, options.width, options.height, edges=edges,
    )


# ------------------------------------------------------------------- banners


def _banner(applied: tuple[AppliedGuideline, ...], options: RenderOptions) -> list[Primitive]:
    primitives: list[Primitive] = []
    for i, entry in enumerate(applied):
        prefix = "[unimplemented] " if entry.unimplemented else ""
        primitives.append(
            TextMark(
                (12.0, 18.0 + i * 16.0),
                f"{prefix}{entry.statement}",
                config.LABEL_FONT_SIZE,
                Style(fill="#b03030"),
                anchor="start",
                tag=f"banner:{entry.guideline_id}",
            )
        )
    return primitives


# ----------------------------------------------------------------- transform


def _shift(primitive: Primitive, scale: float, dx: float, dy: float, tag_prefix: str) -> Primitive:
    def pt(p: Point) -> Point:
        return (p[0] * scale + dx, p[1] * scale + dy)

    style = primitive.style
    if style.stroke_width is not None or style.dash is not None:
        style = replace(
            style,
            stroke_width=None if style.stroke_width is None else style.stroke_width * scale,
            dash=None if style.dash is None else tuple(d * scale for d in style.dash),
        )
    tag = f"{tag_prefix}{primitive.tag}" if primitive.tag else None
    if isinstance(primitive, Polyline):
        return Polyline(tuple(pt(p) for p in primitive.points), style, tag)
    if isinstance(primitive, Polygon):
        return Polygon(tuple(pt(p) for p in primitive.points), style, tag)
    if isinstance(primitive, QuadraticCurve):
        return QuadraticCurve(pt(primitive.start), pt(primitive.control), pt(primitive.end), style, tag)
    if isinstance(primitive, CircleMark):
        return CircleMark(pt(primitive.center), primitive.radius * scale, style, tag)
    if isinstance(primitive, RectMark):
        x, y = pt((primitive.x, primitive.y))
        return RectMark(x, y, primitive.width * scale, primitive.height * scale, style, tag)
    return TextMark(pt(primitive.position), primitive.content, primitive.size * scale,
                    style, primitive.anchor, tag)


# ---------------------------------------------------------------------- main


def render(
    graph: Graph,
    plan: RenderPlan,
    options: RenderOptions | None = None,
    applied: tuple[AppliedGuideline, ...] = (),
) -> Scene:
    """Deterministic scene for a graph under a validated plan."""
    options = options or RenderOptions()
    _check_plan_agreement(graph, plan)

    animation = (
        config.DASH_CYCLE_SECONDS
        if plan.edge_style_mapping == "animated_pattern_edges"
        else None
    )

    if graph.timestep_count > 1:
        primitives, frames = _dynamic_primitives(graph, plan, options)
    else:
        edges = graph.edges_at(0)
        if plan.layout_mapping == "adjacency_matrix":
            primitives = _matrix_primitives(graph, edges, options)
        else:
            layout = _layout_for(graph, edges, plan, options)
            primitives = _static_primitives(graph, edges, plan, options, layout)
        frames = ()

    if options.banner and applied:
        primitives = list(primitives) + _banner(applied, options)

    return Scene(
        width=options.width,
        height=options.height,
        primitives=tuple(primitives),
        metadata=SceneMetadata(applied=applied, animation_cycle=animation, frames=frames),
    )


def _dynamic_primitives(graph: Graph, plan: RenderPlan, options: RenderOptions):
    steps = graph.timestep_count
    cols = math.ceil(math.sqrt(steps))
    rows = math.ceil(steps / cols)
    cell_w = options.width / cols
    cell_h = options.height / rows
    scale = min(cell_w / options.width, cell_h / options.height)

    shared_layout: LayoutResult | None = None
    if plan.layout_mapping in ("mental_map_layout", "overloaded_orthogonal_layout"):
        shared_layout = _layout_for(graph, graph.edges, plan, options)

    primitives: list[Primitive] = []
    frames: list[FrameInfo] = []
    for t in range(steps):
        edges = graph.edges_at(t)
        if plan.layout_mapping == "adjacency_matrix":
            sub = _matrix_primitives(graph, edges, options)
            positions: dict[str, Point] = {}
        else:
            layout = shared_layout or _layout_for(graph, edges, plan, options)
            if shared_layout is not None and layout.routes is not None:
                # Orthogonal positions are shared; recompute routes per slice.
                layout = LayoutResult(
                    positions=layout.positions,
                    routes={
                        e.pair: layout.routes.get(e.pair, (layout.positions[e.source],
                                                           layout.positions[e.target]))
                        for e in edges
                    },
                )
            sub = _static_primitives(graph, edges, plan, options, layout)
            positions = layout.positions
        ox = (t % cols) * cell_w
        oy = (t // cols) * cell_h
        primitives.append(
            RectMark(ox + 1, oy + 1, cell_w - 2, cell_h - 2,
                     Style(fill=None, stroke="#bbbbbb", stroke_width=1.0),
                     tag=f"t{t}:frame")
        )
        primitives.extend(_shift(p, scale, ox, oy, f"t{t}:") for p in sub)
        primitives.append(
            TextMark((ox + 6, oy + 14), f"t{t}", config.LABEL_FONT_SIZE,
                     Style(fill="#666666"), anchor="start", tag=f"t{t}:label")
        )
        frames.append(FrameInfo(timestep=t, origin=(ox, oy), scale=scale, positions=positions))
    return primitives, tuple(frames)


# ------------------------------------------------------------------ previews


def _preview_graph(directed: bool, dynamic: bool) -> Graph:
    ids = [f"s{i}" for i in range(6)]
    nodes = tuple(Node(node_id, cluster=0 if i < 3 else 1) for i, node_id in enumerate(ids))
    pairs = [
        ("s0", "s1"), ("s0", "s2"), ("s1", "s2"),
        ("s2", "s3"),
        ("s3", "s4"), ("s3", "s5"), ("s4", "s5"),
    ]
    if dynamic:
        edges = tuple(
            Edge(u, v, attributes=(1.0, 2.0), timestep=t)
            for t in range(2)
            for u, v in (pairs if t == 0 else pairs[1:] + [("s1", "s4")])
        )
        return Graph(nodes, edges, directed=directed, timestep_count=2)
    edges = tuple(Edge(u, v, attributes=(1.0 + i, 2.0)) for i, (u, v) in enumerate(pairs))
    return Graph(nodes, edges, directed=directed)


PREVIEW_WIDTH = 220.0
PREVIEW_HEIGHT = 170.0


def render_preview(record: GuidelineRecord) -> Scene:
    """The mapping rendered on a fixed 6-node preview graph (thumbnails)."""
    mapping_id = record.mapping_id or "stub:"
    spec = mapping_spec(mapping_id) if record.mapping_id else None
    directed = GraphTypeTag.UNDIRECTED not in record.graph_types
    if spec is not None and spec.requires_directed is not None:
        directed = spec.requires_directed
    dynamic = mapping_id in ("mental_map_layout", "small_multiples_mode")
    graph = _preview_graph(directed, dynamic)

    layout = edge_style = None
    overlays: tuple[str, ...] = ()
    annotations: tuple[str, ...] = ()
    if spec is not None:
        if spec.kind is MappingKind.LAYOUT:
            layout = mapping_id
        elif spec.kind is MappingKind.EDGE_STYLE:
            edge_style = mapping_id
        elif spec.kind is MappingKind.OVERLAY:
            overlays = (mapping_id,)
        else:
            annotations = (mapping_id,)
    plan = RenderPlan(
        main=record.id, combined=(), layout_mapping=layout, edge_style_mapping=edge_style,
        overlay_mappings=overlays, annotation_mappings=annotations,
    )
    options = RenderOptions(width=PREVIEW_WIDTH, height=PREVIEW_HEIGHT,
                            iterations=120, banner=False)
    return render(graph, plan, options)
