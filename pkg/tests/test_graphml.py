from __future__ import annotations

import warnings

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from graphguide.graphml import (
    GraphmlError,
    GraphmlParseError,
    GraphmlSchemaError,
    GraphmlWarning,
    MissingEndpointError,
    UnsupportedFeatureError,
    parse_graphml,
    write_graphml,
)
from graphguide.generate import generate_graph
from graphguide.model import Graph, GenerationSpec

from conftest import graphs

MINIMAL = b"""<?xml version="1.0"?>
<graphml xmlns="http://graphml.graphdrawing.org/xmlns">
  <graph edgedefault="directed">
    <node id="a"/><node id="b"/>
    <edge source="a" target="b"/>
  </graph>
</graphml>"""


def test_minimal_document():
    graph = parse_graphml(MINIMAL)
    assert graph.directed
    assert len(graph.nodes) == 2
    assert len(graph.edges) == 1


def test_namespace_free_document():
    graph = parse_graphml(MINIMAL.replace(b' xmlns="http://graphml.graphdrawing.org/xmlns"', b""))
    assert len(graph.nodes) == 2


def test_missing_edgedefault_is_schema_error():
    with pytest.raises(GraphmlSchemaError):
        parse_graphml(MINIMAL.replace(b' edgedefault="directed"', b""))


def test_dangling_endpoint_names_the_node():
    doc = MINIMAL.replace(b'<node id="b"/>', b"")
    with pytest.raises(MissingEndpointError) as info:
        parse_graphml(doc)
    assert info.value.node_id == "b"
    assert "b" in str(info.value)


def test_self_loop_unsupported():
    doc = MINIMAL.replace(b'source="a" target="b"', b'source="a" target="a"')
    with pytest.raises(UnsupportedFeatureError):
        parse_graphml(doc)


def test_malformed_xml_reports_position():
    with pytest.raises(GraphmlParseError) as info:
        parse_graphml(b"<graphml><graph edgedefault='directed'>")
    assert info.value.line is not None


def test_two_graph_elements_rejected():
    doc = MINIMAL.replace(
        b"</graph>", b'</graph><graph edgedefault="directed"></graph>'
    )
    with pytest.raises(GraphmlSchemaError):
        parse_graphml(doc)


def test_wrong_root_rejected():
    with pytest.raises(GraphmlSchemaError):
        parse_graphml(b"<gexf><graph edgedefault='directed'/></gexf>")


@pytest.mark.parametrize(
    "snippet",
    [
        b'<node id="c"><graph edgedefault="directed"/></node>',
        b'<node id="c"><port name="p"/></node>',
        b"<hyperedge/>",
    ],
)
def test_nested_structures_unsupported(snippet):
    doc = MINIMAL.replace(b'<node id="a"/>', b'<node id="a"/>' + snippet)
    with pytest.raises(UnsupportedFeatureError):
        parse_graphml(doc)


def test_unrecognized_key_warns_and_is_ignored():
    doc = MINIMAL.replace(
        b'<node id="a"/>',
        b'<node id="a"><data key="color">red</data></node>',
    )
    with pytest.warns(GraphmlWarning):
        graph = parse_graphml(doc)
    assert graph.node("a").label is None


def test_undirected_override_in_directed_doc_stores_both_arcs():
    doc = MINIMAL.replace(
        b'<edge source="a" target="b"/>',
        b'<edge source="a" target="b" directed="false"/>',
    )
    graph = parse_graphml(doc)
    assert {(e.source, e.target) for e in graph.edges} == {("a", "b"), ("b", "a")}


def test_directed_override_in_undirected_doc_warns():
    doc = MINIMAL.replace(b'edgedefault="directed"', b'edgedefault="undirected"')
    doc = doc.replace(
        b'<edge source="a" target="b"/>',
        b'<edge source="a" target="b" directed="true"/>',
    )
    with pytest.warns(GraphmlWarning):
        graph = parse_graphml(doc)
    assert not graph.directed
    assert len(graph.edges) == 1


def test_recognized_keys_parse():
    doc = b"""<graphml>
      <key id="k0" for="node" attr.name="x" attr.type="double"/>
      <key id="k1" for="node" attr.name="y" attr.type="double"/>
      <key id="k2" for="node" attr.name="cluster" attr.type="int"/>
      <key id="k3" for="node" attr.name="label" attr.type="string"/>
      <key id="k4" for="edge" attr.name="weight" attr.type="double"/>
      <key id="k5" for="edge" attr.name="attributes" attr.type="string"/>
      <graph edgedefault="undirected">
        <node id="a"><data key="k0">1.5</data><data key="k1">2.5</data>
          <data key="k2">3</data><data key="k3">alpha</data></node>
        <node id="b"/>
        <edge source="a" target="b"><data key="k4">0.5</data>
          <data key="k5">1.0 2.0 3.0</data></edge>
      </graph>
    </graphml>"""
    graph = parse_graphml(doc)
    node = graph.node("a")
    assert node.position == (1.5, 2.5)
    assert node.cluster == 3
    assert node.label == "alpha"
    edge = graph.edges[0]
    assert edge.weight == 0.5
    assert edge.attributes == (1.0, 2.0, 3.0)


def test_cluster_key_written_per_node():
    graph = generate_graph(GenerationSpec(node_count=12, cluster_count=3, seed=7))
    doc = write_graphml(graph).decode()
    assert doc.count("<node ") == 12
    assert doc.count('<data key="cluster">') == 12


def test_write_is_deterministic():
    graph = generate_graph(GenerationSpec(node_count=15, cluster_count=2, seed=3))
    assert write_graphml(graph) == write_graphml(graph)


@settings(max_examples=200, suppress_health_check=[HealthCheck.too_slow])
@given(graphs(decorated=True, max_timesteps=3))
def test_round_trip_property(graph: Graph):
    assert parse_graphml(write_graphml(graph)) == graph


@settings(max_examples=300)
@given(st.binary(max_size=400))
def test_parser_never_crashes_on_bytes(data):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            parse_graphml(data)
        except GraphmlError:
            pass


@settings(max_examples=200)
@given(st.text(max_size=400))
def test_parser_never_crashes_on_text(text):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            parse_graphml(text)
        except GraphmlError:
            pass
