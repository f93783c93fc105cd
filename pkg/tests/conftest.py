from __future__ import annotations

import pytest
from hypothesis import strategies as st

from graphguide.model import Edge, Graph, Node
from graphguide.registry import GuidelineRegistry
from graphguide.rng import SplitMix64

# Label text that survives XML: no control chars, no surrogates, and no \r
# (XML parsers normalize carriage returns).
xml_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cc", "Cs")),
    max_size=12,
).map(lambda s: s.replace("\r", ""))

finite_floats = st.floats(allow_nan=False, allow_infinity=False, width=64)


@st.composite
def graphs(
    draw,
    min_nodes: int = 2,
    max_nodes: int = 12,
    directed: bool | None = None,
    decorated: bool = False,
    max_timesteps: int = 1,
):
    n = draw(st.integers(min_nodes, max_nodes))
    ids = [f"n{i:02d}" for i in range(n)]
    is_directed = draw(st.booleans()) if directed is None else directed
    timestep_count = draw(st.integers(1, max_timesteps)) if max_timesteps > 1 else 1

    if is_directed:
        pairs = [(u, v) for u in ids for v in ids if u != v]
    else:
        pairs = [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 3 * n)))

    edges = []
    for u, v in chosen:
        weight = attributes = timestep = None
        if decorated:
            weight = draw(st.one_of(st.none(), finite_floats))
            attributes = draw(
                st.one_of(st.none(), st.lists(finite_floats, max_size=3).map(tuple))
            )
        if timestep_count > 1:
            timestep = draw(st.one_of(st.none(), st.integers(0, timestep_count - 1)))
        edges.append(Edge(u, v, weight=weight, attributes=attributes, timestep=timestep))

    nodes = []
    for node_id in ids:
        label = position = cluster = None
        if decorated:
            label = draw(st.one_of(st.none(), xml_text))
            position = draw(
                st.one_of(st.none(), st.tuples(finite_floats, finite_floats))
            )
            cluster = draw(st.one_of(st.none(), st.integers(0, 4)))
        nodes.append(Node(node_id, label=label, position=position, cluster=cluster))

    return Graph(
        nodes=tuple(nodes),
        edges=tuple(edges),
        directed=is_directed,
        timestep_count=timestep_count,
    )


def seeded_graph(seed: int, max_nodes: int = 12, decorated: bool = True) -> Graph:
    """Deterministic decorated random graph (no hypothesis), for bulk loops."""
    rng = SplitMix64(seed)
    n = 2 + rng.randrange(max_nodes - 1)
    directed = rng.randrange(2) == 1
    timestep_count = 1 + (rng.randrange(3) if rng.randrange(4) == 0 else 0)
    ids = [f"n{i:02d}" for i in range(n)]
    edge_count = rng.randrange(2 * n + 1)
    edges = []
    seen = set()
    for _ in range(edge_count):
        u = rng.choice(ids)
        v = rng.choice(ids)
        if u == v:
            continue
        if not directed and u > v:
            u, v = v, u
        timestep = rng.randrange(timestep_count) if timestep_count > 1 else None
        if (u, v, timestep) in seen:
            continue
        seen.add((u, v, timestep))
        weight = round(rng.uniform() * 10, 3) if rng.randrange(2) else None
        attributes = (
            tuple(round(rng.uniform() * 5, 3) for _ in range(1 + rng.randrange(3)))
            if decorated and rng.randrange(3) == 0
            else None
        )
        edges.append(Edge(u, v, weight=weight, attributes=attributes, timestep=timestep))
    nodes = []
    for node_id in ids:
        label = f"node {node_id}" if decorated and rng.randrange(3) == 0 else None
        position = (
            (round(rng.uniform() * 1000, 2), round(rng.uniform() * 800, 2))
            if decorated and rng.randrange(3) == 0
            else None
        )
        cluster = rng.randrange(4) if decorated and rng.randrange(2) == 0 else None
        nodes.append(Node(node_id, label=label, position=position, cluster=cluster))
    return Graph(
        nodes=tuple(nodes), edges=tuple(edges), directed=directed,
        timestep_count=timestep_count,
    )


@pytest.fixture(scope="session")
def registry() -> GuidelineRegistry:
    return GuidelineRegistry.load()
