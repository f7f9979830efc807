"""Labelled binary trees with unordered children, and their marked variant.

Children of an internal vertex are unordered.  We realise this with a
normal form: the child holding the smaller minimum leaf label comes first.
`Node` applies the normal form on construction, so every tree value is
canonical and plain ``==``/``hash`` compare trees as unordered objects.

Vertex addresses are tuples over {0, 1} read from the root in canonical
child order; ``()`` is the root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence, Union

from wellpath.errors import BadAddress, InvalidTree, SizeMismatch

Address = tuple[int, ...]


@dataclass(frozen=True)
class Leaf:
    label: int

    @property
    def low(self) -> int:
        return self.label

    @property
    def size(self) -> int:
        return 1

    def __str__(self):
        return str(self.label)


@dataclass(frozen=True)
class Node:
    first: "Tree"
    second: "Tree"
    low: int = field(init=False, compare=False, repr=False)
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        a, b = self.first, self.second
        if b.low < a.low:
            object.__setattr__(self, "first", b)
            object.__setattr__(self, "second", a)
            a, b = b, a
        object.__setattr__(self, "low", a.low)
        object.__setattr__(self, "size", a.size + b.size)

    @property
    def children(self) -> tuple["Tree", "Tree"]:
        return (self.first, self.second)

    def __str__(self):
        return f"[{self.first},{self.second}]"


Tree = Union[Leaf, Node]


@dataclass(frozen=True)
class MarkedTree:
    """A labelled binary tree with one marked vertex (leaf or internal)."""

    tree: Tree
    mark: Address = ()

    def __post_init__(self):
        object.__setattr__(self, "mark", tuple(self.mark))
        subtree(self.tree, self.mark)

    @property
    def size(self) -> int:
        return self.tree.size

    def marked_vertex(self) -> Tree:
        return subtree(self.tree, self.mark)

    def __str__(self):
        return f"{self.tree}@{''.join(map(str, self.mark)) or 'root'}"


def leaves(tree: Tree) -> list[int]:
    """Leaf labels in canonical left-to-right order."""
    if isinstance(tree, Leaf):
        return [tree.label]
    return leaves(tree.first) + leaves(tree.second)


def validate_tree(tree: Tree) -> Tree:
    labels = sorted(leaves(tree))
    if labels != list(range(1, len(labels) + 1)):
        raise InvalidTree(f"leaf labels {labels} are not 1..{len(labels)}")
    return tree


def canonicalize(tree: Tree) -> Tree:
    """Rebuild ``tree`` bottom-up in min-leaf-label child order.

    Trees built through `Node` are already canonical, so this is the
    identity on them; it exists for trees assembled from foreign input.
    """
    if isinstance(tree, Leaf):
        return tree
    return Node(canonicalize(tree.first), canonicalize(tree.second))


def relabel(tree: Tree, target: Sequence[int]) -> Tree:
    """Apply the order-preserving map from {1..n} onto the integer set ``target``."""
    image = sorted(target)
    if len(set(image)) != len(image) or len(image) != tree.size:
        raise SizeMismatch(f"cannot relabel a size-{tree.size} tree onto {len(set(image))} labels")

    def go(t):
        if isinstance(t, Leaf):
            return Leaf(image[t.label - 1])
        return Node(go(t.first), go(t.second))

    return go(tree)


def subtree(tree: Tree, address: Sequence[int]) -> Tree:
    node = tree
    for step in address:
        if isinstance(node, Leaf) or step not in (0, 1):
            raise BadAddress(f"address {tuple(address)} does not resolve")
        node = node.children[step]
    return node


@dataclass(frozen=True)
class VertexInfo:
    address: Address
    is_leaf: bool
    label: int | None
    sibling: Address | None


def resolve(tree: Tree, address: Sequence[int]) -> VertexInfo:
    address = tuple(address)
    node = subtree(tree, address)
    sibling = address[:-1] + (1 - address[-1],) if address else None
    if isinstance(node, Leaf):
        return VertexInfo(address, True, node.label, sibling)
    return VertexInfo(address, False, None, sibling)


def vertices(tree: Tree, prefix: Address = ()) -> Iterator[tuple[Address, Tree]]:
    """All (address, subtree) pairs, preorder."""
    yield prefix, tree
    if isinstance(tree, Node):
        yield from vertices(tree.first, prefix + (0,))
        yield from vertices(tree.second, prefix + (1,))


def single_leaf_count(tree: Tree) -> int:
    """Leaves whose sibling is an internal vertex."""
    count = 0
    for _, node in vertices(tree):
        if isinstance(node, Node):
            a, b = node.children
            count += isinstance(a, Leaf) and isinstance(b, Node)
            count += isinstance(b, Leaf) and isinstance(a, Node)
    return count


def quasi_single_leaf_count(mtree: MarkedTree) -> int:
    """Unmarked leaves whose sibling is marked or internal."""
    count = 0
    for addr, node in vertices(mtree.tree):
        if isinstance(node, Leaf):
            continue
        for i in (0, 1):
            child, other = node.children[i], node.children[1 - i]
            if not isinstance(child, Leaf) or addr + (i,) == mtree.mark:
                continue
            if isinstance(other, Node) or addr + (1 - i,) == mtree.mark:
                count += 1
    return count


def enumerate_trees(labels: int | Sequence[int]) -> Iterator[Tree]:
    """Every labelled binary tree on the given leaf labels (or on 1..n), once each.

    Direct generation by splitting the label set in two, with the smallest
    label always on the first side; independent of any bijection.
    """
    if isinstance(labels, int):
        labels = range(1, labels + 1)
    labels = tuple(sorted(labels))
    if not labels:
        return
    if len(labels) == 1:
        yield Leaf(labels[0])
        return
    head, rest = labels[0], labels[1:]
    for r in range(0, len(rest)):
        for extra in combinations(rest, r):
            left = (head,) + extra
            right = tuple(x for x in rest if x not in extra)
            for a in enumerate_trees(left):
                for b in enumerate_trees(right):
                    yield Node(a, b)


def enumerate_marked_trees(n: int) -> Iterator[MarkedTree]:
    for tree in enumerate_trees(n):
        for addr, _ in vertices(tree):
            yield MarkedTree(tree, addr)


TAU2 = Node(Leaf(1), Leaf(2))
RHO1 = MarkedTree(Leaf(1), ())
