"""The classification trees guidelines are filed under.

Two fixed trees: the decision tree (which visualization decision a guideline
informs) and the task tree (which analysis tasks it was studied with). Both
are ordered; canonical order drives deterministic views and tie-breaking.
"""

from __future__ import annotations

from enum import Enum

# name -> ordered children (empty tuple = leaf)
DECISION_TREE: dict[str, tuple[str, ...]] = {
    "layout": (),
    "nodes": (),
    "edges": ("directed", "undirected"),
    "additional_information": ("group", "multivariate"),
    "readability": (),
    "dynamic_graphs": (),
}

TASK_TREE: dict[str, tuple[str, ...]] = {
    "low_level": (
        "retrieve_value",
        "filter",
        "compute_derived_value",
        "find_extrema",
        "sort",
        "determine_range",
        "characterize_distribution",
        "find_anomalies",
        "find_clusters",
        "find_correlations",
    ),
    "topology": ("adjacency", "accessibility", "common_connection", "connectivity"),
    "attribute": ("node", "edge"),
    "browsing": ("follow_path", "revisit"),
    "overview": (),
    "high_level": (),
    "own_opinion": (),
}


class IfType(str, Enum):
    """What kind of condition a guideline's if-part states."""

    GRAPH_TYPE = "graph_type"
    ANSWER_CHARACTERISTIC = "answer_characteristic"
    GRAPH_PROPERTY = "graph_property"
    WANTED_DETAIL = "wanted_detail"
    TASK = "task"
    INTERACTION = "interaction"


IF_TYPE_ORDER = tuple(IfType)


def is_decision_path(path: tuple[str, ...]) -> bool:
    """True iff path names a category or subcategory of the decision tree."""
    if len(path) == 1:
        return path[0] in DECISION_TREE
    if len(path) == 2:
        return path[0] in DECISION_TREE and path[1] in DECISION_TREE[path[0]]
    return False


def all_task_tags() -> tuple[str, ...]:
    """Every valid task tag, in canonical tree order."""
    tags: list[str] = []
    for top, subs in TASK_TREE.items():
        if subs:
            tags.extend(f"{top}.{sub}" for sub in subs)
        else:
            tags.append(top)
    return tuple(tags)


_TASK_TAGS = all_task_tags()
_TASK_ORDER = {tag: i for i, tag in enumerate(_TASK_TAGS)}


def is_task_tag(tag: str) -> bool:
    return tag in _TASK_ORDER


def task_order(tag: str) -> int:
    return _TASK_ORDER[tag]
