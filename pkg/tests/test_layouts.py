from __future__ import annotations

import math

import pytest
from hypothesis import given, settings

from graphguide import config
from graphguide.layouts import (
    ideal_edge_length,
    layout_force_directed,
    layout_overloaded_orthogonal,
    topological_rows,
)
from graphguide.model import Edge, Graph, Node

from conftest import graphs, seeded_graph


def chain(n, directed=True):
    ids = [f"n{i}" for i in range(n)]
    return Graph(
        tuple(Node(i) for i in ids),
        tuple(Edge(ids[i], ids[i + 1]) for i in range(n - 1)),
        directed=directed,
    )


def test_single_node_centered():
    result = layout_force_directed(Graph((Node("a"),), (), directed=False))
    assert result.positions["a"] == (config.CANVAS_WIDTH / 2, config.CANVAS_HEIGHT / 2)


def test_two_connected_nodes_near_spring_equilibrium():
    # one spring: attraction d^2/k equals repulsion k^2/d exactly at d = k
    graph = chain(2, directed=False)
    result = layout_force_directed(graph, seed=5, iterations=500)
    (x1, y1), (x2, y2) = result.positions["n0"], result.positions["n1"]
    d = math.hypot(x2 - x1, y2 - y1)
    k = ideal_edge_length(2, config.CANVAS_WIDTH, config.CANVAS_HEIGHT)
    assert 0.5 * k <= d <= 2.0 * k


def test_use_case_layout_finite_and_inside_canvas():
    from graphguide.examples import use_case_graph

    result = layout_force_directed(use_case_graph("sparse"), seed=1)
    for x, y in result.positions.values():
        assert math.isfinite(x) and math.isfinite(y)
        assert 0 <= x <= config.CANVAS_WIDTH
        assert 0 <= y <= config.CANVAS_HEIGHT


def test_force_layout_deterministic():
    graph = seeded_graph(17)
    a = layout_force_directed(graph, seed=3)
    b = layout_force_directed(graph, seed=3)
    assert a.positions == b.positions
    c = layout_force_directed(graph, seed=4)
    assert a.positions != c.positions


@settings(max_examples=60, deadline=None)
@given(graphs(max_nodes=15))
def test_force_layout_positions_always_inside(graph):
    result = layout_force_directed(graph, seed=2, iterations=60)
    for x, y in result.positions.values():
        assert math.isfinite(x) and math.isfinite(y)
        assert 0 <= x <= config.CANVAS_WIDTH
        assert 0 <= y <= config.CANVAS_HEIGHT


def test_orthogonal_chain_rows_increase():
    result = layout_overloaded_orthogonal(chain(3))
    ys = [result.positions[f"n{i}"][1] for i in range(3)]
    assert ys == sorted(ys)
    assert ys[0] < ys[1] < ys[2]


def test_orthogonal_rejects_undirected():
    with pytest.raises(ValueError):
        layout_overloaded_orthogonal(chain(3, directed=False))


def test_orthogonal_routes_axis_aligned_with_max_two_bends():
    graph = seeded_graph(23)
    if not graph.directed:
        graph = Graph(graph.nodes, graph.edges, directed=True,
                      timestep_count=graph.timestep_count)
    result = layout_overloaded_orthogonal(graph)
    for route in result.routes.values():
        assert len(route) <= 4  # at most 2 bends
        for (x1, y1), (x2, y2) in zip(route, route[1:]):
            assert x1 == x2 or y1 == y2


def test_orthogonal_distinct_rows_and_columns():
    graph = seeded_graph(31)
    graph = Graph(graph.nodes, graph.edges, directed=True, timestep_count=graph.timestep_count)
    result = layout_overloaded_orthogonal(graph)
    xs = [p[0] for p in result.positions.values()]
    ys = [p[1] for p in result.positions.values()]
    assert len(set(xs)) == len(xs)
    assert len(set(ys)) == len(ys)


def test_topological_rows_valid_on_dags():
    graph = Graph(
        tuple(Node(f"n{i}") for i in range(6)),
        tuple(Edge(u, v) for u, v in
              [("n0", "n1"), ("n0", "n2"), ("n1", "n3"), ("n2", "n3"),
               ("n3", "n4"), ("n3", "n5")]),
        directed=True,
    )
    order = topological_rows(graph)
    position = {node: i for i, node in enumerate(order)}
    for edge in graph.edges:
        assert position[edge.source] < position[edge.target]


def test_topological_rows_handles_cycles():
    graph = Graph(
        tuple(Node(f"n{i}") for i in range(3)),
        (Edge("n0", "n1"), Edge("n1", "n2"), Edge("n2", "n0")),
        directed=True,
    )
    order = topological_rows(graph)
    assert sorted(order) == ["n0", "n1", "n2"]
