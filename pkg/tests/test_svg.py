from __future__ import annotations

import xml.etree.ElementTree as ET

from graphguide.combine import compose
from graphguide.examples import use_case_graph
from graphguide.metrics import compute_metrics
from graphguide.rendering import render
from graphguide.scene import CircleMark, Polyline, Scene, Style
from graphguide.svg import scene_to_svg


def test_empty_scene_is_valid_svg():
    data = scene_to_svg(Scene(width=100, height=80, primitives=()))
    root = ET.fromstring(data)
    assert root.tag.endswith("svg")
    assert len(list(root)) == 0


def test_single_circle():
    scene = Scene(
        width=100, height=80,
        primitives=(CircleMark((10.0, 20.0), 5.0, Style(fill="#123456")),),
    )
    root = ET.fromstring(scene_to_svg(scene))
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) == 1
    assert circles[0].get("cx") == "10"


def test_identical_scenes_identical_bytes():
    scene = Scene(
        width=10, height=10,
        primitives=(Polyline(((0.0, 0.0), (3.0, 4.5)), Style(stroke="#000", stroke_width=1.25)),),
    )
    assert scene_to_svg(scene) == scene_to_svg(scene)


def test_render_to_svg_deterministic(registry):
    graph = use_case_graph("sparse")
    plan = compose(registry, "tapered-edges", [], compute_metrics(graph))
    assert scene_to_svg(render(graph, plan)) == scene_to_svg(render(graph, plan))


def test_dash_animation_element_emitted(registry):
    graph = use_case_graph("sparse")
    plan = compose(registry, "animated-pattern-edges", [], compute_metrics(graph))
    data = scene_to_svg(render(graph, plan))
    root = ET.fromstring(data)
    animates = [el for el in root.iter() if el.tag.endswith("animate")]
    assert animates
    assert all(el.get("attributeName") == "stroke-dashoffset" for el in animates)
    assert all(el.get("repeatCount") == "indefinite" for el in animates)


def test_tags_emitted_as_classes():
    scene = Scene(
        width=10, height=10,
        primitives=(CircleMark((1.0, 1.0), 1.0, Style(fill="#000"), tag="node:a"),),
    )
    root = ET.fromstring(scene_to_svg(scene))
    circle = next(el for el in root.iter() if el.tag.endswith("circle"))
    assert circle.get("class") == "node:a"


def test_text_is_escaped():
    from graphguide.scene import TextMark

    scene = Scene(
        width=10, height=10,
        primitives=(TextMark((1.0, 1.0), "<a & b>", 10.0, Style(fill="#000")),),
    )
    data = scene_to_svg(scene)
    assert b"&lt;a &amp; b&gt;" in data
    ET.fromstring(data)  # still well-formed
