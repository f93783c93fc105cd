"""Random graph generation: clustered preferential attachment with time slices.

Each cluster grows by preferential attachment (new nodes bring
``attachment_edges`` edges, targets drawn proportionally to degree), clusters
are joined by a random spanning tree of inter-cluster edges, and later time
slices churn a fixed fraction of the previous slice's edges. Everything is
driven by one SplitMix64 stream, so a spec with a fixed seed maps to exactly
one graph.
"""

from __future__ import annotations

import math

from . import config
from .model import Edge, Graph, GenerationSpec, Node
from .rng import SplitMix64


def _partition_sizes(total: int, parts: int) -> list[int]:
    """Split total into `parts` sizes differing by at most one, largest first."""
    base, extra = divmod(total, parts)
    return [base + 1 if i < extra else base for i in range(parts)]


def _preferential_attachment(members: list[str], m: int, rng: SplitMix64) -> list[tuple[str, str]]:
    """Arcs of one cluster, each oriented later-node -> earlier-node.

    Seed star of m+1 nodes, then every further node attaches to m distinct
    existing nodes picked from a degree-weighted pool. Clusters smaller than
    m+2 fall back to a complete graph (the attachment model needs m+1 seeds).
    """
    n = len(members)
    if n <= m + 1:
        return [(members[j], members[i]) for i in range(n) for j in range(i + 1, n)]
    arcs = [(members[i], members[0]) for i in range(1, m + 1)]
    # Pool with one entry per incident edge end: degree-proportional sampling.
    pool = [members[0]] * m + members[1 : m + 1]
    for source in members[m + 1 :]:
        targets: list[str] = []
        while len(targets) < m:
            candidate = rng.choice(pool)
            if candidate not in targets:
                targets.append(candidate)
        for target in targets:
            arcs.append((source, target))
        pool.extend(targets)
        pool.extend([source] * m)
    return arcs


def _churned_slices(
    base: list[tuple[str, str]],
    node_ids: list[str],
    directed: bool,
    timestep_count: int,
    rng: SplitMix64,
) -> list[list[tuple[str, str]]]:
    slices = [base]
    previous = base
    for _ in range(1, timestep_count):
        churn = math.ceil(config.TIMESTEP_CHURN_FRACTION * len(previous))
        removed = set(rng.sample(range(len(previous)), min(churn, len(previous))))
        current = [pair for i, pair in enumerate(previous) if i not in removed]
        present = set(current)
        while len(current) < len(previous) - len(removed) + churn:
            u = rng.choice(node_ids)
            v = rng.choice(node_ids)
            if u == v:
                continue
            if not directed and u > v:
                u, v = v, u
            if (u, v) in present:
                continue
            present.add((u, v))
            current.append((u, v))
        slices.append(current)
        previous = current
    return slices


def generate_graph(spec: GenerationSpec) -> Graph:
    """Deterministic graph for a generation spec (same spec, same graph)."""
    rng = SplitMix64(spec.seed)
    width = len(str(spec.node_count - 1))
    ids = [f"n{i:0{width}d}" for i in range(spec.node_count)]

    sizes = _partition_sizes(spec.node_count, spec.cluster_count)
    clusters: list[list[str]] = []
    cursor = 0
    for size in sizes:
        clusters.append(ids[cursor : cursor + size])
        cursor += size

    arcs: list[tuple[str, str]] = []
    for members in clusters:
        arcs.extend(_preferential_attachment(members, spec.attachment_edges, rng))
    # Spanning tree over clusters keeps the union connected with exactly
    # cluster_count - 1 inter-cluster edges.
    for i in range(1, spec.cluster_count):
        j = rng.randrange(i)
        arcs.append((rng.choice(clusters[i]), rng.choice(clusters[j])))

    if not spec.directed:
        arcs = [(u, v) if u <= v else (v, u) for u, v in arcs]

    cluster_of = {node: idx for idx, members in enumerate(clusters) for node in members}
    nodes = tuple(Node(id=node, cluster=cluster_of[node]) for node in ids)

    if spec.timestep_count == 1:
        edges = tuple(Edge(u, v) for u, v in arcs)
    else:
        slices = _churned_slices(arcs, ids, spec.directed, spec.timestep_count, rng)
        edges = tuple(
            Edge(u, v, timestep=t) for t, pairs in enumerate(slices) for u, v in pairs
        )

    return Graph(
        nodes=nodes,
        edges=edges,
        directed=spec.directed,
        timestep_count=spec.timestep_count,
    )
