"""Graph metrics and structural type detection."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .model import DegenerateGraphError, Graph, GraphMetrics, GraphTypeTag


def is_acyclic(node_ids: Sequence[str], arcs: Iterable[tuple[str, str]]) -> bool:
    """Kahn's algorithm: the graph is acyclic iff every node can be peeled."""
    indegree = {n: 0 for n in node_ids}
    succ: dict[str, list[str]] = {n: [] for n in node_ids}
    for source, target in arcs:
        succ[source].append(target)
        indegree[target] += 1
    queue = deque(n for n in node_ids if indegree[n] == 0)
    peeled = 0
    while queue:
        node = queue.popleft()
        peeled += 1
        for nxt in succ[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    return peeled == len(indegree)


def is_weakly_connected(node_ids: Sequence[str], arcs: Iterable[tuple[str, str]]) -> bool:
    if not node_ids:
        return True
    neighbors: dict[str, list[str]] = {n: [] for n in node_ids}
    for source, target in arcs:
        neighbors[source].append(target)
        neighbors[target].append(source)
    seen = {node_ids[0]}
    queue = deque([node_ids[0]])
    while queue:
        node = queue.popleft()
        for nxt in neighbors[node]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(node_ids)


def detect_structural_types(
    node_ids: Sequence[str],
    arcs: Sequence[tuple[str, str]],
    directed: bool,
) -> frozenset[GraphTypeTag]:
    """Structural tags of one edge slice: directedness, plus dag/tree when earned.

    tree requires dag, weak connectivity, and exactly |V|-1 edges.
    """
    if not directed:
        return frozenset({GraphTypeTag.UNDIRECTED})
    tags = {GraphTypeTag.DIRECTED}
    if is_acyclic(node_ids, arcs):
        tags.add(GraphTypeTag.DAG)
        if len(arcs) == len(node_ids) - 1 and is_weakly_connected(node_ids, arcs):
            tags.add(GraphTypeTag.TREE)
    return frozenset(tags)


def compute_metrics(graph: Graph) -> GraphMetrics:
    """Node count, edge count, density, and type tags for a graph.

    Density follows the directedness convention: E / (N*(N-1)) for directed
    graphs, 2E / (N*(N-1)) for undirected ones. For dynamic graphs the
    timestep-0 slice is measured (suitability matching needs a single
    #N/#D pair); per-slice edge counts are reported alongside.

    Raises :class:`DegenerateGraphError` for graphs with fewer than 2 nodes,
    where density is undefined.
    """
    n = len(graph.nodes)
    if n < 2:
        raise DegenerateGraphError(f"density undefined for {n} node(s)")
    base = graph.edges_at(0)
    e = len(base)
    pairs = n * (n - 1)
    density = e / pairs if graph.directed else 2 * e / pairs
    detected = detect_structural_types(graph.node_ids, [edge.pair for edge in base], graph.directed)
    return GraphMetrics(
        node_count=n,
        edge_count=e,
        density=density,
        detected_types=detected | graph.declared_types,
        timestep_count=graph.timestep_count,
        per_timestep_edge_counts=tuple(
            len(graph.edges_at(t)) for t in range(graph.timestep_count)
        ),
    )
