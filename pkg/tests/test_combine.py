from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphguide.combine import (
    InvalidCombinationError,
    SlotConflictError,
    compose,
    validate_combination,
)
from graphguide.examples import example_graph, use_case_graph
from graphguide.mappingdefs import MappingKind, mapping_spec
from graphguide.metrics import compute_metrics
from graphguide.model import GraphTypeTag, type_closure
from graphguide.registry import NotFoundError
from graphguide.suitability import assess


@pytest.fixture(scope="module")
def directed_metrics():
    return compute_metrics(use_case_graph("sparse"))


@pytest.fixture(scope="module")
def undirected_metrics():
    return compute_metrics(example_graph(GraphTypeTag.UNDIRECTED))


def test_orthogonal_plus_tapered_ok(registry, directed_metrics):
    assert validate_combination(
        registry, "overloaded-orthogonal-layout", ["tapered-edges"], directed_metrics
    ) == []
    plan = compose(registry, "overloaded-orthogonal-layout", ["tapered-edges"], directed_metrics)
    assert plan.layout_mapping == "overloaded_orthogonal_layout"
    assert plan.edge_style_mapping == "tapered_edges"


def test_three_guideline_combination_ok(registry, undirected_metrics):
    violations = validate_combination(
        registry,
        "convex-hull-highly-connected",
        ["bubble-sets-groups", "avoid-crossings-max-angle"],
        undirected_metrics,
    )
    assert violations == []
    plan = compose(
        registry,
        "convex-hull-highly-connected",
        ["bubble-sets-groups", "avoid-crossings-max-angle"],
        undirected_metrics,
    )
    assert plan.layout_mapping == "crossing_angle_layout"
    assert set(plan.overlay_mappings) == {"convex_hull_overlay", "bubble_sets_overlay"}


def test_two_variant_plans(registry, undirected_metrics):
    variant_a = compose(registry, "force-directed-layout", ["edge-bar-charts"], undirected_metrics)
    variant_b = compose(registry, "convex-hull-highly-connected", ["edge-bar-charts"],
                        undirected_metrics)
    assert variant_a.layout_mapping == "force_directed_layout"
    assert variant_b.layout_mapping is None  # default force-directed
    assert "edge_bar_charts" in variant_a.overlay_mappings
    assert "edge_bar_charts" in variant_b.overlay_mappings
    assert variant_a != variant_b


def test_same_category_rejected_with_r2(registry, directed_metrics):
    violations = validate_combination(
        registry, "tapered-edges", ["partially-drawn-edges"], directed_metrics
    )
    assert [v.rule for v in violations] == ["R2"]
    assert set(violations[0].guideline_ids) == {"tapered-edges", "partially-drawn-edges"}


def test_cross_vis_type_rejected_with_r3(registry, directed_metrics):
    violations = validate_combination(
        registry, "tapered-edges", ["adjacency-matrix-dense"], directed_metrics
    )
    assert [v.rule for v in violations] == ["R3"]


def test_disjoint_graph_types_rejected_with_r1(registry, directed_metrics):
    violations = validate_combination(
        registry, "tapered-edges", ["curved-edges"], directed_metrics
    )
    rules = {v.rule for v in violations}
    assert "R1" in rules          # directed vs undirected: nothing shared
    assert "R4" in rules          # and curved-edges is inapplicable here


def test_shared_type_must_fit_current_graph(registry, undirected_metrics):
    # both formulated for directed graphs, but the graph is undirected
    violations = validate_combination(
        registry, "overloaded-orthogonal-layout", ["tapered-edges"], undirected_metrics
    )
    rules = [v.rule for v in violations]
    assert "R1" in rules and "R4" in rules


def test_inapplicable_single_guideline_r4(registry, undirected_metrics):
    violations = validate_combination(registry, "tapered-edges", [], undirected_metrics)
    rules = [v.rule for v in violations]
    assert rules.count("R4") == 1
    assert "R1" in rules


def test_unknown_ids_raise(registry, directed_metrics):
    with pytest.raises(NotFoundError):
        validate_combination(registry, "zzz", [], directed_metrics)
    with pytest.raises(NotFoundError):
        validate_combination(registry, "tapered-edges", ["zzz"], directed_metrics)


def test_order_insensitive(registry, undirected_metrics):
    ids = ["bubble-sets-groups", "avoid-crossings-max-angle", "edge-bar-charts"]
    baseline = None
    for perm in itertools.permutations(ids):
        violations = validate_combination(
            registry, "convex-hull-highly-connected", list(perm), undirected_metrics
        )
        key = sorted((v.rule, v.guideline_ids) for v in violations)
        if baseline is None:
            baseline = key
        assert key == baseline


def test_single_guideline_plan_fills_one_slot(registry, directed_metrics):
    plan = compose(registry, "tapered-edges", [], directed_metrics)
    assert plan.layout_mapping is None
    assert plan.edge_style_mapping == "tapered_edges"
    assert plan.overlay_mappings == ()
    assert plan.annotation_mappings == ()


def test_compose_requires_valid_combination(registry, directed_metrics):
    with pytest.raises(InvalidCombinationError) as info:
        compose(registry, "tapered-edges", ["partially-drawn-edges"], directed_metrics)
    assert [v.rule for v in info.value.violations] == ["R2"]


def test_slot_conflict_layout_vs_layout(registry, directed_metrics):
    # distinct categories (layout vs dynamic_graphs), but both map to the
    # exclusive layout slot: reported, never silently resolved
    violations = validate_combination(
        registry, "force-directed-layout", ["mental-map-fixed-layout"], directed_metrics
    )
    assert violations == []
    with pytest.raises(SlotConflictError) as info:
        compose(registry, "force-directed-layout", ["mental-map-fixed-layout"], directed_metrics)
    assert info.value.slot == "layout"


@settings(max_examples=150)
@given(st.data())
def test_valid_plans_satisfy_invariants(registry, directed_metrics, data):
    ids = sorted(registry.ids())
    main = data.draw(st.sampled_from(ids))
    combined = data.draw(st.lists(st.sampled_from(ids), max_size=3, unique=True))
    try:
        plan = compose(registry, main, combined, directed_metrics)
    except (InvalidCombinationError, SlotConflictError):
        return
    records = [registry.guideline_details(i) for i in plan.guideline_ids()]
    # pairwise distinct decision categories
    paths = [r.decision_path for r in records]
    assert len(paths) == len(set(paths))
    # a shared graph type compatible with the graph
    shared = frozenset.intersection(*(r.graph_types for r in records))
    assert shared & type_closure(directed_metrics.detected_types)
    # one vis type, all applicable
    assert len({r.vis_type for r in records}) == 1
    assert all(assess(r, directed_metrics).applicable for r in records)
    # slot kinds respected
    for mapping_id in filter(None, (plan.layout_mapping,)):
        assert mapping_spec(mapping_id).kind is MappingKind.LAYOUT
    for mapping_id in filter(None, (plan.edge_style_mapping,)):
        assert mapping_spec(mapping_id).kind is MappingKind.EDGE_STYLE
    assert all(mapping_spec(m).kind is MappingKind.OVERLAY for m in plan.overlay_mappings)
    assert all(mapping_spec(m).kind is MappingKind.ANNOTATION for m in plan.annotation_mappings)
