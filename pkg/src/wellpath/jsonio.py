"""Canonical JSON forms for paths, trees, marked trees and matchings.

    path         {"labels":[2,1],"steps":[1]}
    tree         leaf -> integer, internal vertex -> [first, second] in canonical order
    marked tree  {"mark":[0,1],"tree":...}
    matching     {"pairs":[[1,3],[2,4]]}

`dumps` emits sorted keys and no whitespace so equal objects serialise to
identical bytes.
"""
from __future__ import annotations

import json
from typing import Any

from wellpath.errors import InvalidTree, WellPathError
from wellpath.matchings import Matching, validate_matching
from wellpath.paths import WellLabelledPath, validate_path
from wellpath.trees import Leaf, MarkedTree, Node, Tree, validate_tree


def dumps(obj: Any) -> str:
    return json.dumps(to_json(obj), separators=(",", ":"), sort_keys=True)


def to_json(obj: Any) -> Any:
    if isinstance(obj, WellLabelledPath):
        return {"steps": list(obj.steps), "labels": list(obj.labels)}
    if isinstance(obj, MarkedTree):
        return {"tree": tree_to_json(obj.tree), "mark": list(obj.mark)}
    if isinstance(obj, (Leaf, Node)):
        return tree_to_json(obj)
    if isinstance(obj, Matching):
        return {"pairs": [list(p) for p in obj.pairs()]}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def tree_to_json(tree: Tree) -> Any:
    if isinstance(tree, Leaf):
        return tree.label
    return [tree_to_json(tree.first), tree_to_json(tree.second)]


def tree_from_json(data: Any) -> Tree:
    def build(d):
        if isinstance(d, bool):
            raise InvalidTree(f"bad tree node {d!r}")
        if isinstance(d, int):
            return Leaf(d)
        if isinstance(d, list) and len(d) == 2:
            return Node(build(d[0]), build(d[1]))
        raise InvalidTree(f"bad tree node {d!r}")

    return validate_tree(build(data))


def path_from_json(data: Any) -> WellLabelledPath:
    try:
        return validate_path(data["steps"], data["labels"])
    except (KeyError, TypeError) as exc:
        raise WellPathError(f"bad path object {data!r}") from exc


def marked_tree_from_json(data: Any) -> MarkedTree:
    try:
        tree, mark = data["tree"], data["mark"]
    except (KeyError, TypeError) as exc:
        raise WellPathError(f"bad marked tree object {data!r}") from exc
    return MarkedTree(tree_from_json(tree), tuple(mark))


def matching_from_json(data: Any) -> Matching:
    try:
        pairs = data["pairs"]
    except (KeyError, TypeError) as exc:
        raise WellPathError(f"bad matching object {data!r}") from exc
    return validate_matching(tuple(p) for p in pairs)


def loads(line: str, kind: str, marked: bool = False):
    """Parse one JSON line as a ``"path"``, ``"tree"`` or ``"matching"``."""
    data = json.loads(line)
    if kind == "path":
        return path_from_json(data)
    if kind == "tree":
        return marked_tree_from_json(data) if marked else tree_from_json(data)
    if kind == "matching":
        return matching_from_json(data)
    raise ValueError(f"unknown object kind {kind!r}")
