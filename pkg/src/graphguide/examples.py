"""Bundled example graphs, one per graph type, plus the two packaged
GraphML files used by the walkthrough tests.

The gallery graphs are hand-authored so each one actually exhibits its
type: the plain directed example contains a cycle, the DAG has a
reconverging branch (so it is not a tree), the flow graph carries positive
edge weights, and the trajectory is a single positioned path.
"""

from __future__ import annotations

from importlib import resources

from .model import Edge, Graph, GraphTypeTag, Node

EXAMPLE_DESCRIPTIONS: dict[GraphTypeTag, str] = {
    GraphTypeTag.DIRECTED: "Directed graph with feedback cycles (8 nodes)",
    GraphTypeTag.UNDIRECTED: "Undirected graph with two clusters and edge attributes (10 nodes)",
    GraphTypeTag.DAG: "Directed acyclic graph with a reconverging branch (7 nodes)",
    GraphTypeTag.TREE: "Rooted tree, edges pointing away from the root (7 nodes)",
    GraphTypeTag.FLOW_GRAPH: "Flow graph: weighted transfers between positioned sites (6 nodes)",
    GraphTypeTag.TRAJECTORY: "Trajectory: a single positioned path of 8 waypoints",
}


def _directed() -> Graph:
    nodes = tuple(Node(f"d{i}") for i in range(8))
    arcs = [
        ("d0", "d1"), ("d1", "d2"), ("d2", "d0"),  # cycle
        ("d2", "d3"), ("d3", "d4"), ("d4", "d5"),
        ("d5", "d3"),                               # second cycle
        ("d4", "d6"), ("d6", "d7"), ("d1", "d6"),
    ]
    return Graph(nodes, tuple(Edge(u, v) for u, v in arcs), directed=True)


def _undirected() -> Graph:
    nodes = tuple(
        Node(f"u{i}", cluster=0 if i < 5 else 1) for i in range(10)
    )
    pairs = [
        ("u0", "u1"), ("u0", "u2"), ("u1", "u2"), ("u1", "u3"), ("u2", "u4"),
        ("u3", "u4"),
        ("u4", "u5"),  # bridge between the clusters
        ("u5", "u6"), ("u5", "u7"), ("u6", "u8"), ("u7", "u8"), ("u7", "u9"),
        ("u8", "u9"),
    ]
    edges = tuple(
        Edge(u, v, attributes=(1.0 + 0.5 * i, 3.0 - 0.2 * i)) for i, (u, v) in enumerate(pairs)
    )
    return Graph(nodes, edges, directed=False)


def _dag() -> Graph:
    nodes = tuple(Node(f"a{i}") for i in range(7))
    arcs = [
        ("a0", "a1"), ("a0", "a2"), ("a1", "a3"), ("a2", "a3"),  # diamond
        ("a3", "a4"), ("a3", "a5"), ("a4", "a6"), ("a5", "a6"),  # second diamond
    ]
    return Graph(nodes, tuple(Edge(u, v) for u, v in arcs), directed=True)


def _tree() -> Graph:
    nodes = tuple(Node(f"t{i}") for i in range(7))
    arcs = [
        ("t0", "t1"), ("t0", "t2"),
        ("t1", "t3"), ("t1", "t4"),
        ("t2", "t5"), ("t2", "t6"),
    ]
    return Graph(nodes, tuple(Edge(u, v) for u, v in arcs), directed=True)


def _flow_graph() -> Graph:
    nodes = (
        Node("f0", label="source", position=(80.0, 400.0)),
        Node("f1", label="hub-a", position=(320.0, 220.0)),
        Node("f2", label="hub-b", position=(320.0, 560.0)),
        Node("f3", label="sink-a", position=(640.0, 150.0)),
        Node("f4", label="sink-b", position=(640.0, 420.0)),
        Node("f5", label="sink-c", position=(640.0, 650.0)),
    )
    edges = (
        Edge("f0", "f1", weight=14.0),
        Edge("f0", "f2", weight=9.0),
        Edge("f1", "f3", weight=8.0),
        Edge("f1", "f4", weight=6.0),
        Edge("f2", "f4", weight=4.0),
        Edge("f2", "f5", weight=5.0),
    )
    return Graph(
        nodes, edges, directed=True,
        declared_types=frozenset({GraphTypeTag.FLOW_GRAPH}),
    )


def _trajectory() -> Graph:
    waypoints = [
        (60.0, 700.0), (180.0, 560.0), (270.0, 430.0), (420.0, 380.0),
        (560.0, 300.0), (700.0, 310.0), (820.0, 220.0), (930.0, 90.0),
    ]
    nodes = tuple(Node(f"p{i}", position=pos) for i, pos in enumerate(waypoints))
    edges = tuple(Edge(f"p{i}", f"p{i + 1}") for i in range(len(waypoints) - 1))
    return Graph(
        nodes, edges, directed=True,
        declared_types=frozenset({GraphTypeTag.TRAJECTORY}),
    )


_BUILDERS = {
    GraphTypeTag.DIRECTED: _directed,
    GraphTypeTag.UNDIRECTED: _undirected,
    GraphTypeTag.DAG: _dag,
    GraphTypeTag.TREE: _tree,
    GraphTypeTag.FLOW_GRAPH: _flow_graph,
    GraphTypeTag.TRAJECTORY: _trajectory,
}


def example_graph(kind: GraphTypeTag) -> Graph:
    """One fixed, hand-authored graph per graph type tag."""
    kind = GraphTypeTag(kind)
    return _BUILDERS[kind]()


def use_case_graph(which: str) -> Graph:
    """The packaged 50-node walkthrough graphs: 'sparse' (156 edges) or
    'dense' (248 edges), both directed."""
    from .graphml import parse_graphml

    return parse_graphml(use_case_bytes(which))


def use_case_bytes(which: str) -> bytes:
    if which not in ("sparse", "dense"):
        raise ValueError("expected 'sparse' or 'dense'")
    name = f"use_case_{which}.graphml"
    return resources.files("graphguide.data").joinpath(name).read_bytes()
