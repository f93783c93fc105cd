import pytest

from graphguide.examples import EXAMPLE_DESCRIPTIONS, example_graph, use_case_graph
from graphguide.graphml import parse_graphml, write_graphml
from graphguide.metrics import compute_metrics
from graphguide.model import GraphTypeTag


@pytest.mark.parametrize("kind", list(GraphTypeTag))
def test_each_kind_exhibits_its_type(kind):
    graph = example_graph(kind)
    metrics = compute_metrics(graph)
    assert kind in metrics.detected_types


def test_directed_example_is_not_a_dag():
    metrics = compute_metrics(example_graph(GraphTypeTag.DIRECTED))
    assert metrics.detected_types == {GraphTypeTag.DIRECTED}


def test_dag_example_is_not_a_tree():
    metrics = compute_metrics(example_graph(GraphTypeTag.DAG))
    assert GraphTypeTag.DAG in metrics.detected_types
    assert GraphTypeTag.TREE not in metrics.detected_types


def test_tree_example():
    metrics = compute_metrics(example_graph(GraphTypeTag.TREE))
    assert GraphTypeTag.TREE in metrics.detected_types


def test_flow_graph_edges_weighted_positive():
    graph = example_graph(GraphTypeTag.FLOW_GRAPH)
    assert graph.edges
    assert all(e.weight is not None and e.weight > 0 for e in graph.edges)


def test_trajectory_is_single_positioned_path():
    graph = example_graph(GraphTypeTag.TRAJECTORY)
    assert all(n.position is not None for n in graph.nodes)
    # simple path: connected, E = N - 1, exactly two endpoints of degree 1
    degree = {n.id: 0 for n in graph.nodes}
    for e in graph.edges:
        degree[e.source] += 1
        degree[e.target] += 1
    assert len(graph.edges) == len(graph.nodes) - 1
    assert sorted(degree.values())[:2] == [1, 1]
    assert all(d <= 2 for d in degree.values())


def test_undirected_example_has_clusters_and_attributes():
    graph = example_graph(GraphTypeTag.UNDIRECTED)
    assert graph.has_clusters()
    assert all(e.attributes for e in graph.edges)


@pytest.mark.parametrize("kind", list(GraphTypeTag))
def test_examples_round_trip_graphml(kind):
    graph = example_graph(kind)
    assert parse_graphml(write_graphml(graph)) == graph


def test_descriptions_cover_all_kinds():
    assert set(EXAMPLE_DESCRIPTIONS) == set(GraphTypeTag)


@pytest.mark.parametrize(
    "which,edges,density", [("sparse", 156, 0.0637), ("dense", 248, 0.1012)]
)
def test_use_case_graphs(which, edges, density):
    graph = use_case_graph(which)
    metrics = compute_metrics(graph)
    assert metrics.node_count == 50
    assert metrics.edge_count == edges
    assert metrics.density == pytest.approx(density, abs=1e-4)
    assert metrics.detected_types == {GraphTypeTag.DIRECTED}


def test_use_case_unknown_name():
    with pytest.raises(ValueError):
        use_case_graph("medium")
