"""Layouts: force-directed spring embedder and overloaded orthogonal grid.

Both are deterministic: the spring embedder from its seed, the orthogonal
layout from the graph alone (node-id tie-breaking throughout).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from . import config
from .model import Edge, Graph
from .rng import SplitMix64

Point = tuple[float, float]


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, Point]
    # Axis-aligned route per edge pair, present only for orthogonal layouts.
    routes: dict[tuple[str, str], tuple[Point, ...]] | None = None


def ideal_edge_length(node_count: int, width: float, height: float) -> float:
    """Spring rest length: sqrt(area / N), the usual uniform-spread spacing."""
    return math.sqrt(width * height / max(node_count, 1))


def _margin_rect(width: float, height: float) -> tuple[float, float, float, float]:
    mx = width * config.CANVAS_MARGIN_FRACTION
    my = height * config.CANVAS_MARGIN_FRACTION
    return mx, my, width - 2 * mx, height - 2 * my


def rescale_to_canvas(
    points: np.ndarray, width: float, height: float
) -> np.ndarray:
    """Affinely map the bounding box of `points` onto the canvas margin rect.

    Degenerate extents (single node, collinear axis) collapse to the center
    of that axis instead of dividing by zero.
    """
    mx, my, usable_w, usable_h = _margin_rect(width, height)
    out = np.empty_like(points)
    for axis, (offset, usable) in enumerate(((mx, usable_w), (my, usable_h))):
        lo = points[:, axis].min()
        hi = points[:, axis].max()
        extent = hi - lo
        if extent < 1e-9:
            out[:, axis] = offset + usable / 2
        else:
            out[:, axis] = offset + (points[:, axis] - lo) / extent * usable
    return out


def layout_force_directed(
    graph: Graph,
    seed: int = 42,
    iterations: int = config.FORCE_ITERATIONS,
    width: float = config.CANVAS_WIDTH,
    height: float = config.CANVAS_HEIGHT,
    edges: tuple[Edge, ...] | None = None,
) -> LayoutResult:
    """Spring embedder (Fruchterman-Reingold style).

    All node pairs repel with k^2/d, edge endpoints attract with d^2/k,
    displacement is capped by a linearly cooling temperature, and the final
    positions are rescaled to fit the canvas with a margin. ``edges``
    restricts the attractive forces to one time slice of a dynamic graph.

    Deterministic for a fixed seed.
    """
    ids = list(graph.node_ids)
    n = len(ids)
    if n == 0:
        return LayoutResult(positions={})
    if n == 1:
        return LayoutResult(positions={ids[0]: (width / 2, height / 2)})

    rng = SplitMix64(seed)
    pos = np.array(
        [[rng.uniform() * width, rng.uniform() * height] for _ in ids], dtype=float
    )
    index = {node_id: i for i, node_id in enumerate(ids)}
    edge_list = graph.edges if edges is None else edges
    pairs = np.array(
        [[index[e.source], index[e.target]] for e in edge_list], dtype=int
    ).reshape(-1, 2)

    k = ideal_edge_length(n, width, height)
    temperature = width * config.FORCE_INITIAL_TEMPERATURE_FRACTION
    cooling = temperature / max(iterations, 1)

    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, np.inf)
        dist = np.maximum(dist, 1e-6)
        repulse = (k * k) / (dist * dist)
        disp = (delta / dist[:, :, None] * repulse[:, :, None]).sum(axis=1)

        if len(pairs):
            diff = pos[pairs[:, 0]] - pos[pairs[:, 1]]
            edge_dist = np.maximum(np.linalg.norm(diff, axis=1, keepdims=True), 1e-6)
            pull = diff / edge_dist * (edge_dist**2 / k)
            np.add.at(disp, pairs[:, 0], -pull)
            np.add.at(disp, pairs[:, 1], pull)

        length = np.maximum(np.linalg.norm(disp, axis=1, keepdims=True), 1e-9)
        pos += disp / length * np.minimum(length, temperature)
        temperature = max(temperature - cooling, 0.01)

    pos = rescale_to_canvas(pos, width, height)
    return LayoutResult(positions={node_id: (float(x), float(y)) for node_id, (x, y) in zip(ids, pos)})


def topological_rows(graph: Graph) -> list[str]:
    """Node order for the orthogonal layout.

    Kahn's algorithm with min-id tie-breaking; on a cyclic graph, when no
    zero-indegree node remains the smallest-id remaining node is forced out,
    which breaks the cycle deterministically. For DAGs the result is a valid
    topological order.
    """
    ids = list(graph.node_ids)
    indegree = {n: 0 for n in ids}
    succ: dict[str, list[str]] = {n: [] for n in ids}
    for edge in graph.edges:
        succ[edge.source].append(edge.target)
        indegree[edge.target] += 1
    ready = [n for n in ids if indegree[n] == 0]
    heapq.heapify(ready)
    remaining = set(ids)
    order: list[str] = []
    while remaining:
        while ready and ready[0] not in remaining:
            heapq.heappop(ready)
        if ready:
            node = heapq.heappop(ready)
        else:
            node = min(remaining)  # cycle: force the smallest id
        remaining.discard(node)
        order.append(node)
        for nxt in succ[node]:
            if nxt in remaining:
                indegree[nxt] -= 1
                if indegree[nxt] == 0:
                    heapq.heappush(ready, nxt)
    return order


def layout_overloaded_orthogonal(
    graph: Graph,
    width: float = config.CANVAS_WIDTH,
    height: float = config.CANVAS_HEIGHT,
) -> LayoutResult:
    """Overloaded orthogonal layout for directed graphs.

    Nodes occupy distinct rows and columns along the grid diagonal, rows in
    topological order (cycle-broken when needed), and every edge is routed
    as an L-shaped axis-aligned polyline (at most 2 bends), so edges between
    the same rows/columns share channels.
    """
    if not graph.directed:
        raise ValueError("orthogonal layout requires a directed graph")
    order = topological_rows(graph)
    n = len(order)
    mx, my, usable_w, usable_h = _margin_rect(width, height)
    step_x = usable_w / max(n - 1, 1)
    step_y = usable_h / max(n - 1, 1)
    positions = {
        node: (mx + i * step_x, my + i * step_y) for i, node in enumerate(order)
    }
    routes: dict[tuple[str, str], tuple[Point, ...]] = {}
    for edge in graph.edges:
        sx, sy = positions[edge.source]
        tx, ty = positions[edge.target]
        if sx == tx or sy == ty:
            routes[edge.pair] = ((sx, sy), (tx, ty))
        else:
            routes[edge.pair] = ((sx, sy), (tx, sy), (tx, ty))
    return LayoutResult(positions=positions, routes=routes)
