"""GraphML subset: parsing and serialization.

The supported subset is one <graph> element with an ``edgedefault`` of
"directed" or "undirected", plain nodes and edges, and these data keys:

    node keys:  x, y (real canvas units), cluster (int >= 0), label (string)
    edge keys:  weight (real), timestep (int >= 0),
                attributes (space-separated reals)
    graph keys: timestep_count (int >= 1),
                declared_types (space-separated: flow_graph, trajectory)

Unrecognized keys are ignored with a :class:`GraphmlWarning`. Per-edge
``directed`` overrides are honored per GraphML semantics (an undirected edge
inside a directed document becomes a pair of opposite arcs); the graph-level
flag always follows ``edgedefault``. Nested graphs, ports, and hyperedges
are rejected. Documents with and without the GraphML namespace are accepted.

Serialization orders nodes by id and edges by (source, target, timestep),
producing byte-identical output for equal graphs.
"""

from __future__ import annotations

import warnings
import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .model import Edge, Graph, GraphTypeTag, Node

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"

NODE_KEYS = {"x": float, "y": float, "cluster": int, "label": str}
EDGE_KEYS = {"weight": float, "timestep": int, "attributes": str}
GRAPH_KEYS = {"timestep_count": int, "declared_types": str}


class GraphmlError(ValueError):
    """Base for everything the reader can reject."""


class GraphmlParseError(GraphmlError):
    """Malformed XML; carries the reported line/column when available."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class GraphmlSchemaError(GraphmlError):
    """Structurally valid XML that violates the supported GraphML subset."""


class MissingEndpointError(GraphmlError):
    """An edge references a node the document never declares."""

    def __init__(self, edge: tuple[str, str], node_id: str):
        super().__init__(f"edge {edge[0]!r} -> {edge[1]!r} references undeclared node {node_id!r}")
        self.edge = edge
        self.node_id = node_id


class UnsupportedFeatureError(GraphmlError):
    """Valid GraphML outside the subset: self-loops, nested graphs, ports, hyperedges."""


class GraphmlWarning(UserWarning):
    """Recoverable oddities: unknown keys, lossy per-edge direction overrides."""


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _parse_bool(value: str) -> bool:
    return value.strip().lower() == "true"


def parse_graphml(document: bytes | str) -> Graph:
    """Parse a GraphML document into a :class:`Graph`.

    Raises :class:`GraphmlParseError` for malformed XML,
    :class:`GraphmlSchemaError` for subset violations (e.g. missing
    ``edgedefault``), :class:`MissingEndpointError` for dangling edge
    endpoints, and :class:`UnsupportedFeatureError` for self-loops, nested
    graphs, ports, or hyperedges.
    """
    if isinstance(document, str):
        document = document.encode("utf-8")
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        line, column = exc.position if exc.position else (None, None)
        raise GraphmlParseError(f"malformed XML: {exc.msg.split(':')[0]}", line, column) from exc

    if _local(root.tag) != "graphml":
        raise GraphmlSchemaError(f"root element must be <graphml>, got <{_local(root.tag)}>")

    graphs = [child for child in root if _local(child.tag) == "graph"]
    if len(graphs) != 1:
        raise GraphmlSchemaError(f"expected exactly one <graph> element, found {len(graphs)}")
    graph_el = graphs[0]

    key_names: dict[str, tuple[str, str]] = {}
    for child in root:
        if _local(child.tag) != "key":
            continue
        key_id = child.get("id")
        name = child.get("attr.name", key_id)
        domain = child.get("for", "all")
        if key_id is not None:
            key_names[key_id] = (name, domain)

    edgedefault = graph_el.get("edgedefault")
    if edgedefault not in ("directed", "undirected"):
        raise GraphmlSchemaError('graph element must carry edgedefault="directed" or "undirected"')
    directed = edgedefault == "directed"

    def read_data(element: ET.Element, recognized: dict, context: str) -> dict:
        values: dict[str, object] = {}
        for data in element:
            if _local(data.tag) != "data":
                continue
            key_id = data.get("key", "")
            name, _domain = key_names.get(key_id, (key_id, "all"))
            if name not in recognized:
                warnings.warn(
                    f"ignoring unrecognized data key {name!r} on {context}", GraphmlWarning,
                    stacklevel=3,
                )
                continue
            text = data.text or ""
            caster = recognized[name]
            try:
                values[name] = caster(text.strip()) if caster is not str else text
            except ValueError as exc:
                raise GraphmlSchemaError(f"bad value for key {name!r} on {context}: {text!r}") from exc
        return values

    graph_values = read_data(graph_el, GRAPH_KEYS, "graph")
    timestep_count = int(graph_values.get("timestep_count", 1))
    declared: frozenset[GraphTypeTag] = frozenset()
    if "declared_types" in graph_values:
        try:
            declared = frozenset(GraphTypeTag(t) for t in str(graph_values["declared_types"]).split())
        except ValueError as exc:
            raise GraphmlSchemaError(f"unknown declared type: {exc}") from exc

    nodes: list[Node] = []
    edge_rows: list[tuple[str, str, dict, bool]] = []
    max_timestep = 0
    for child in graph_el:
        tag = _local(child.tag)
        if tag == "data":
            continue
        if tag == "node":
            if any(_local(g.tag) == "graph" for g in child):
                raise UnsupportedFeatureError("nested graphs are not supported")
            if any(_local(g.tag) == "port" for g in child):
                raise UnsupportedFeatureError("ports are not supported")
            node_id = child.get("id")
            if node_id is None:
                raise GraphmlSchemaError("node element without id")
            values = read_data(child, NODE_KEYS, f"node {node_id!r}")
            position = None
            if "x" in values or "y" in values:
                if not ("x" in values and "y" in values):
                    raise GraphmlSchemaError(f"node {node_id!r} has only one of x/y")
                position = (float(values["x"]), float(values["y"]))
            nodes.append(
                Node(
                    id=node_id,
                    label=values.get("label"),
                    position=position,
                    cluster=int(values["cluster"]) if "cluster" in values else None,
                )
            )
        elif tag == "edge":
            source, target = child.get("source"), child.get("target")
            if source is None or target is None:
                raise GraphmlSchemaError("edge element without source/target")
            if source == target:
                raise UnsupportedFeatureError(f"self-loop on node {source!r} is not supported")
            values = read_data(child, EDGE_KEYS, f"edge {source!r} -> {target!r}")
            if "timestep" in values:
                max_timestep = max(max_timestep, int(values["timestep"]))
            override = child.get("directed")
            edge_directed = directed if override is None else _parse_bool(override)
            edge_rows.append((source, target, values, edge_directed))
        elif tag == "hyperedge":
            raise UnsupportedFeatureError("hyperedges are not supported")

    known_ids = {n.id for n in nodes}
    timestep_count = max(timestep_count, max_timestep + 1)

    edges: list[Edge] = []
    for source, target, values, edge_directed in edge_rows:
        for endpoint in (source, target):
            if endpoint not in known_ids:
                raise MissingEndpointError((source, target), endpoint)
        attributes = None
        if "attributes" in values:
            attributes = tuple(float(part) for part in str(values["attributes"]).split())
        edge = Edge(
            source,
            target,
            weight=float(values["weight"]) if "weight" in values else None,
            attributes=attributes,
            timestep=int(values["timestep"]) if "timestep" in values else None,
        )
        edges.append(edge)
        if directed and not edge_directed:
            # Undirected edge in a directed document: keep both arcs.
            edges.append(Edge(target, source, edge.weight, edge.attributes, edge.timestep))
        elif not directed and edge_directed:
            warnings.warn(
                f"edge {source!r} -> {target!r} is marked directed inside an undirected "
                "document; stored undirected",
                GraphmlWarning,
                stacklevel=2,
            )

    return Graph(
        nodes=tuple(nodes),
        edges=tuple(edges),
        directed=directed,
        timestep_count=timestep_count,
        declared_types=declared,
    )


def _fmt(value: float) -> str:
    return repr(float(value))


def write_graphml(graph: Graph) -> bytes:
    """Serialize a graph to GraphML; output re-parses to an equal graph and
    equal graphs serialize to identical bytes."""
    used_node_keys = set()
    for node in graph.nodes:
        if node.position is not None:
            used_node_keys.update(("x", "y"))
        if node.cluster is not None:
            used_node_keys.add("cluster")
        if node.label is not None:
            used_node_keys.add("label")
    used_edge_keys = set()
    for edge in graph.edges:
        if edge.weight is not None:
            used_edge_keys.add("weight")
        if edge.attributes is not None:
            used_edge_keys.add("attributes")
        if edge.timestep is not None:
            used_edge_keys.add("timestep")
    used_graph_keys = set()
    if graph.timestep_count > 1:
        used_graph_keys.add("timestep_count")
    if graph.declared_types:
        used_graph_keys.add("declared_types")

    key_types = {
        "x": "double", "y": "double", "cluster": "int", "label": "string",
        "weight": "double", "timestep": "int", "attributes": "string",
        "timestep_count": "int", "declared_types": "string",
    }
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<graphml xmlns="{GRAPHML_NS}">',
    ]
    for domain, keys in (("graph", used_graph_keys), ("node", used_node_keys), ("edge", used_edge_keys)):
        for name in sorted(keys):
            lines.append(
                f'  <key id="{name}" for="{domain}" attr.name="{name}" attr.type="{key_types[name]}"/>'
            )
    edgedefault = "directed" if graph.directed else "undirected"
    lines.append(f'  <graph edgedefault="{edgedefault}">')
    if graph.timestep_count > 1:
        lines.append(f'    <data key="timestep_count">{graph.timestep_count}</data>')
    if graph.declared_types:
        tags = " ".join(sorted(t.value for t in graph.declared_types))
        lines.append(f'    <data key="declared_types">{tags}</data>')

    for node in graph.nodes:
        data: list[str] = []
        if node.position is not None:
            data.append(f'<data key="x">{_fmt(node.position[0])}</data>')
            data.append(f'<data key="y">{_fmt(node.position[1])}</data>')
        if node.cluster is not None:
            data.append(f'<data key="cluster">{node.cluster}</data>')
        if node.label is not None:
            data.append(f'<data key="label">{escape(node.label)}</data>')
        if data:
            lines.append(f'    <node id={quoteattr(node.id)}>{"".join(data)}</node>')
        else:
            lines.append(f'    <node id={quoteattr(node.id)}/>')

    for edge in graph.edges:
        data = []
        if edge.weight is not None:
            data.append(f'<data key="weight">{_fmt(edge.weight)}</data>')
        if edge.attributes is not None:
            joined = " ".join(_fmt(a) for a in edge.attributes)
            data.append(f'<data key="attributes">{joined}</data>')
        if edge.timestep is not None:
            data.append(f'<data key="timestep">{edge.timestep}</data>')
        head = f'    <edge source={quoteattr(edge.source)} target={quoteattr(edge.target)}'
        lines.append(f'{head}>{"".join(data)}</edge>' if data else f"{head}/>")

    lines.append("  </graph>")
    lines.append("</graphml>")
    return ("\n".join(lines) + "\n").encode("utf-8")
