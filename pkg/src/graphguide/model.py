"""In-memory graph model.

A :class:`Graph` is an immutable simple graph: no self-loops, parallel edges
collapsed at construction, and for undirected graphs the edge (u, v) is the
same edge as (v, u). Graphs may carry several time slices; an edge tagged
with a timestep belongs to that slice only, while an untagged edge is present
in every slice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class GraphTypeTag(str, Enum):
    """Graph categories guidelines are formulated for.

    ``directed``/``undirected`` and the structural refinements ``dag`` and
    ``tree`` are detected from the graph itself. ``flow_graph`` and
    ``trajectory`` are declared metadata (example corpus, uploads): no sound
    structural test separates them from ordinary directed graphs.
    """

    UNDIRECTED = "undirected"
    DIRECTED = "directed"
    DAG = "dag"
    TREE = "tree"
    FLOW_GRAPH = "flow_graph"
    TRAJECTORY = "trajectory"


# Subtype lattice: tree < dag < directed; flow_graph, trajectory < directed.
SUPERTYPES: dict[GraphTypeTag, frozenset[GraphTypeTag]] = {
    GraphTypeTag.TREE: frozenset({GraphTypeTag.DAG, GraphTypeTag.DIRECTED}),
    GraphTypeTag.DAG: frozenset({GraphTypeTag.DIRECTED}),
    GraphTypeTag.FLOW_GRAPH: frozenset({GraphTypeTag.DIRECTED}),
    GraphTypeTag.TRAJECTORY: frozenset({GraphTypeTag.DIRECTED}),
    GraphTypeTag.DIRECTED: frozenset(),
    GraphTypeTag.UNDIRECTED: frozenset(),
}

DECLARED_ONLY_TAGS = frozenset({GraphTypeTag.FLOW_GRAPH, GraphTypeTag.TRAJECTORY})


def type_closure(tags: frozenset[GraphTypeTag] | set[GraphTypeTag]) -> frozenset[GraphTypeTag]:
    """Tags plus all their supertypes under the subtype lattice."""
    closed = set(tags)
    for tag in tags:
        closed |= SUPERTYPES[tag]
    return frozenset(closed)


class GraphError(ValueError):
    """Invalid graph structure."""


class SelfLoopError(GraphError):
    def __init__(self, node_id: str):
        super().__init__(f"self-loop on node {node_id!r} is not supported")
        self.node_id = node_id


class UnknownEndpointError(GraphError):
    def __init__(self, edge: tuple[str, str], node_id: str):
        super().__init__(f"edge {edge[0]!r} -> {edge[1]!r} references unknown node {node_id!r}")
        self.edge = edge
        self.node_id = node_id


class DegenerateGraphError(GraphError):
    """Raised where a metric is undefined for graphs with fewer than 2 nodes."""


@dataclass(frozen=True)
class Node:
    id: str
    label: str | None = None
    position: tuple[float, float] | None = None
    cluster: int | None = None

    def __post_init__(self):
        if self.cluster is not None and self.cluster < 0:
            raise GraphError(f"node {self.id!r}: cluster id must be >= 0")


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    weight: float | None = None
    attributes: tuple[float, ...] | None = None
    timestep: int | None = None

    def __post_init__(self):
        if self.attributes is not None:
            object.__setattr__(self, "attributes", tuple(float(a) for a in self.attributes))
        if self.timestep is not None and self.timestep < 0:
            raise GraphError(f"edge {self.source!r} -> {self.target!r}: timestep must be >= 0")

    @property
    def pair(self) -> tuple[str, str]:
        return (self.source, self.target)


@dataclass(frozen=True)
class Graph:
    """Immutable graph. Construction canonicalizes and validates.

    Nodes are sorted by id and edges by (source, target, timestep), so two
    graphs with the same content compare equal regardless of input order.
    For undirected graphs each edge is stored with source <= target.
    """

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    directed: bool
    timestep_count: int = 1
    declared_types: frozenset[GraphTypeTag] = frozenset()

    def __post_init__(self):
        if self.timestep_count < 1:
            raise GraphError("timestep_count must be >= 1")
        nodes = tuple(sorted(self.nodes, key=lambda n: n.id))
        seen_ids = set()
        for node in nodes:
            if node.id in seen_ids:
                raise GraphError(f"duplicate node id {node.id!r}")
            seen_ids.add(node.id)
        object.__setattr__(self, "nodes", nodes)

        declared = frozenset(self.declared_types)
        if not declared <= DECLARED_ONLY_TAGS:
            bad = sorted(t.value for t in declared - DECLARED_ONLY_TAGS)
            raise GraphError(f"only flow_graph/trajectory can be declared, got {bad}")
        if declared and not self.directed:
            raise GraphError("flow_graph/trajectory graphs must be directed")
        object.__setattr__(self, "declared_types", declared)

        object.__setattr__(self, "edges", self._canonical_edges(seen_ids))

    def _canonical_edges(self, node_ids: set[str]) -> tuple[Edge, ...]:
        canonical: dict[tuple[str, str, int | None], Edge] = {}
        static_pairs: set[tuple[str, str]] = set()
        for edge in self.edges:
            if edge.source == edge.target:
                raise SelfLoopError(edge.source)
            for endpoint in edge.pair:
                if endpoint not in node_ids:
                    raise UnknownEndpointError(edge.pair, endpoint)
            timestep = edge.timestep
            if timestep is not None:
                if timestep >= self.timestep_count:
                    raise GraphError(
                        f"edge {edge.source!r} -> {edge.target!r}: timestep {timestep} "
                        f">= timestep_count {self.timestep_count}"
                    )
                # A single-slice graph is static; the tag carries no information.
                if self.timestep_count == 1:
                    timestep = None
            source, target = edge.source, edge.target
            if not self.directed and source > target:
                source, target = target, source
            if timestep != edge.timestep or source != edge.source:
                edge = Edge(source, target, edge.weight, edge.attributes, timestep)
            if timestep is None:
                static_pairs.add((source, target))
            canonical.setdefault((source, target, timestep), edge)
        # A static edge subsumes per-timestep copies of the same pair.
        kept = [
            e for key, e in canonical.items()
            if e.timestep is None or (key[0], key[1]) not in static_pairs
        ]
        kept.sort(key=lambda e: (e.source, e.target, -1 if e.timestep is None else e.timestep))
        return tuple(kept)

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes)

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def edges_at(self, timestep: int) -> tuple[Edge, ...]:
        """Edges present in one time slice (static edges are in every slice)."""
        if not 0 <= timestep < self.timestep_count:
            raise GraphError(f"timestep {timestep} out of range")
        return tuple(e for e in self.edges if e.timestep is None or e.timestep == timestep)

    def has_clusters(self) -> bool:
        return any(n.cluster is not None for n in self.nodes)


@dataclass(frozen=True)
class GraphMetrics:
    """The matching key for guideline suitability: size, density, and types.

    ``edge_count`` and ``density`` describe the timestep-0 slice; dynamic
    graphs expose per-slice edge counts separately.
    """

    node_count: int
    edge_count: int
    density: float
    detected_types: frozenset[GraphTypeTag]
    timestep_count: int
    per_timestep_edge_counts: tuple[int, ...]


class InvalidGenerationSpecError(ValueError):
    """Generation parameters are out of range or mutually inconsistent."""


@dataclass(frozen=True)
class GenerationSpec:
    """Parameters for the random graph generator.

    ``attachment_edges`` is the number of edges each newly attached node
    brings (preferential attachment); it must stay below the average cluster
    size ``node_count / cluster_count``.
    """

    node_count: int
    cluster_count: int = 1
    timestep_count: int = 1
    directed: bool = False
    attachment_edges: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.node_count < 2:
            raise InvalidGenerationSpecError("node_count must be >= 2")
        if self.cluster_count < 1:
            raise InvalidGenerationSpecError("cluster_count must be >= 1")
        if self.timestep_count < 1:
            raise InvalidGenerationSpecError("timestep_count must be >= 1")
        if self.attachment_edges < 1:
            raise InvalidGenerationSpecError("attachment_edges must be >= 1")
        if self.attachment_edges >= self.node_count / self.cluster_count:
            raise InvalidGenerationSpecError(
                "attachment_edges must be < node_count / cluster_count "
                f"({self.attachment_edges} >= {self.node_count}/{self.cluster_count})"
            )
