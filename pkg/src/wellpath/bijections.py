"""Bijections between well-labelled paths, labelled binary trees and matchings.

    phi          Motzkin paths of size n    <->  labelled binary trees, n leaves
    phi_prime    positive paths of size n   <->  marked labelled binary trees
    psi          trees with n leaves        <->  matchings on [2n-2]   (Chen)
    psi_prime    marked trees, n leaves     <->  matchings on [2n]
    add_step     B_n x [n+1] x {0,1}        <->  B_{n+1} + A_{n+1}

The recursive maps work directly on arbitrary sets of distinct labels.  All
steps only compare labels, so running them on a subset I and on its
standardisation to {1..|I|} commute with the order-preserving relabelling
lambda_I; this saves materialising the relabelled intermediate objects.
"""
from __future__ import annotations

from dataclasses import dataclass

from wellpath.errors import (
    InconsistentMatching,
    NotInImageClass,
    NotMotzkin,
    NotPositive,
    SizeTooSmall,
)
from wellpath.matchings import Matching
from wellpath.paths import PathClass, WellLabelledPath, classify
from wellpath.trees import Address, Leaf, MarkedTree, Node, Tree, vertices

Steps = tuple[int, ...]
Labels = tuple[int, ...]


def _reversed_block(steps: Steps, labels: Labels) -> tuple[Steps, Labels]:
    return tuple(-s for s in reversed(steps)), tuple(reversed(labels))


def _first_return(steps: Steps) -> int:
    """Least k with p_1 + ... + p_k = 0."""
    h = 0
    for k, s in enumerate(steps, start=1):
        h += s
        if h == 0:
            return k
    raise NotMotzkin("no return to height 0 after an initial up step")


def _last_level_one(steps: Steps) -> int:
    """Greatest k <= n with prefix sums >= 1 on 1..k-2 and equal to 1 at k-1.

    Assumes ``steps[0] == 1``.
    """
    k = 2
    h = 0
    for j, s in enumerate(steps, start=1):
        h += s
        if h < 1:
            break
        if h == 1:
            k = j + 1
    return k


# --- Motzkin paths <-> labelled binary trees ---------------------------------

def _phi(steps: Steps, labels: Labels) -> Tree:
    if len(labels) == 2:
        return Node(Leaf(labels[0]), Leaf(labels[1]))
    if steps[0] == 0:
        return Node(Leaf(labels[0]), _phi(steps[1:], labels[1:]))
    k = _first_return(steps)
    left = _phi(*_reversed_block(steps[: k - 1], labels[:k]))
    right = _phi(steps[k:], labels[k:])
    return Node(left, right)


def phi(path: WellLabelledPath) -> Tree:
    """Map a well-labelled Motzkin path to a labelled binary tree of the same size."""
    if classify(path) is not PathClass.MOTZKIN:
        raise NotMotzkin(f"{path} is not a Motzkin path")
    return _phi(path.steps, path.labels)


def _phi_inv(tree: Tree) -> tuple[Steps, Labels]:
    a, b = tree.first, tree.second
    if isinstance(a, Leaf) and isinstance(b, Leaf):
        return (-1,), (a.label, b.label)
    if isinstance(a, Leaf) or isinstance(b, Leaf):
        leaf, sub = (a, b) if isinstance(a, Leaf) else (b, a)
        steps, labels = _phi_inv(sub)
        return (0,) + steps, (leaf.label,) + labels
    first, second = _phi_inv(a), _phi_inv(b)
    # order the unordered pair so that the junction is an ascent
    if first[1][0] > second[1][0]:
        first, second = second, first
    head_steps, head_labels = _reversed_block(*first)
    return head_steps + (-1,) + second[0], head_labels + second[1]


def phi_inv(tree: Tree) -> WellLabelledPath:
    if tree.size < 2:
        raise SizeTooSmall("phi is defined on trees with at least 2 leaves")
    return WellLabelledPath(*_phi_inv(tree))


# --- positive paths <-> marked trees ------------------------------------------

def _attach(other: Tree, marked: Tree, mark: Address) -> tuple[Tree, Address]:
    node = Node(other, marked)
    return node, ((0 if node.first is marked else 1),) + mark


def _phi_prime(steps: Steps, labels: Labels) -> tuple[Tree, Address]:
    n = len(labels)
    if n == 1:
        return Leaf(labels[0]), ()
    if steps[0] == 0:
        sub, mark = _phi_prime(steps[1:], labels[1:])
        return _attach(Leaf(labels[0]), sub, mark)
    k = _last_level_one(steps)
    head = _phi(*_reversed_block(steps[: k - 1], labels[:k]))
    if k == n:
        return head, ()
    sub, mark = _phi_prime(steps[k:], labels[k:])
    return _attach(head, sub, mark)


def phi_prime(path: WellLabelledPath) -> MarkedTree:
    """Map a well-labelled positive path to a marked labelled binary tree."""
    if classify(path) is not PathClass.POSITIVE:
        raise NotPositive(f"{path} is not a positive path")
    return MarkedTree(*_phi_prime(path.steps, path.labels))


def _phi_prime_inv(tree: Tree, mark: Address) -> tuple[Steps, Labels]:
    if not mark:
        if isinstance(tree, Leaf):
            return (), (tree.label,)
        # marked root: read the Motzkin path of the tree backward
        return _reversed_block(*_phi_inv(tree))
    marked, other = tree.children[mark[0]], tree.children[1 - mark[0]]
    steps, labels = _phi_prime_inv(marked, mark[1:])
    if isinstance(other, Leaf):
        return (0,) + steps, (other.label,) + labels
    head_steps, head_labels = _reversed_block(*_phi_inv(other))
    # the joining step is forced by the labels on either side of it
    join = 1 if head_labels[-1] > labels[0] else -1
    return head_steps + (join,) + steps, head_labels + labels


def phi_prime_inv(mtree: MarkedTree) -> WellLabelledPath:
    return WellLabelledPath(*_phi_prime_inv(mtree.tree, mtree.mark))


# --- labelled binary trees <-> matchings (Chen) --------------------------------

def chen_labelling(tree: Tree) -> dict[Address, int]:
    """Label every non-root vertex: leaves keep theirs, internal ones get n+1..2n-2.

    Repeatedly take the unlabelled non-root internal vertex, among those with
    both children labelled, owning the least child label, and give it the
    next unused label.
    """
    n = tree.size
    labels: dict[Address, int] = {}
    pending = []
    for addr, node in vertices(tree):
        if isinstance(node, Leaf):
            labels[addr] = node.label
        elif addr:
            pending.append(addr)
    for new in range(n + 1, 2 * n - 1):
        best, best_child = None, None
        for addr in pending:
            a, b = labels.get(addr + (0,)), labels.get(addr + (1,))
            if a is None or b is None:
                continue
            if best is None or min(a, b) < best_child:
                best, best_child = addr, min(a, b)
        labels[best] = new
        pending.remove(best)
    return labels


def psi(tree: Tree) -> Matching:
    """Pair the labels of siblings under the Chen labelling; a leaf maps to the empty matching."""
    labels = chen_labelling(tree)
    partner = [0] * (2 * tree.size - 2)
    for addr, node in vertices(tree):
        if isinstance(node, Node):
            i, j = labels[addr + (0,)], labels[addr + (1,)]
            partner[i - 1], partner[j - 1] = j, i
    return Matching(tuple(partner))


def psi_inv(matching: Matching) -> Tree:
    """Rebuild the tree bottom-up, replaying the labelling order.

    Keep the set of current subtree roots, initially the leaves 1..n.  The
    vertex labelled m joins the pair of partnered roots with the least
    element; the last two roots become the children of the root.
    """
    n = matching.m + 1
    roots: dict[int, Tree] = {i: Leaf(i) for i in range(1, n + 1)}
    for m in range(n + 1, 2 * n - 1):
        a = min((x for x in roots if matching(x) in roots), default=None)
        if a is None:
            raise InconsistentMatching(f"no partnered roots left when placing {m}")
        roots[m] = Node(roots.pop(a), roots.pop(matching(a)))
    if n == 1:
        return roots[1]
    x, y = roots
    if matching(x) != y:
        raise InconsistentMatching(f"surviving roots {x}, {y} are not partners")
    return Node(roots[x], roots[y])


def psi_prime(mtree: MarkedTree) -> Matching:
    n = mtree.size
    partner = list(psi(mtree.tree).partner) + [0, 0]
    if not mtree.mark:
        partner[2 * n - 2], partner[2 * n - 1] = 2 * n, 2 * n - 1
        return Matching(tuple(partner))
    labels = chen_labelling(mtree.tree)
    k = labels[mtree.mark]
    l = labels[mtree.mark[:-1] + (1 - mtree.mark[-1],)]
    partner[k - 1], partner[2 * n - 1] = 2 * n, k
    partner[l - 1], partner[2 * n - 2] = 2 * n - 1, l
    return Matching(tuple(partner))


def psi_prime_inv(matching: Matching) -> MarkedTree:
    n = matching.m
    if n < 1:
        raise SizeTooSmall("marked trees need at least one leaf")
    partner = list(matching.partner[: 2 * n - 2])
    if matching(2 * n) == 2 * n - 1:
        return MarkedTree(psi_inv(Matching(tuple(partner))), ())
    k, l = matching(2 * n), matching(2 * n - 1)
    partner[k - 1], partner[l - 1] = l, k
    tree = psi_inv(Matching(tuple(partner)))
    for addr, label in chen_labelling(tree).items():
        if label == k:
            return MarkedTree(tree, addr)
    raise InconsistentMatching(f"no vertex labelled {k}")


# --- adding one step to a positive path ----------------------------------------

@dataclass(frozen=True)
class StepAddInput:
    path: WellLabelledPath
    k: int
    b: int

    def __post_init__(self):
        if classify(self.path) is not PathClass.POSITIVE:
            raise NotPositive(f"{self.path} is not a positive path")
        if not 1 <= self.k <= self.path.size + 1 or self.b not in (0, 1):
            raise ValueError(f"need k in 1..{self.path.size + 1} and b in {{0, 1}}")


def add_step(inp: StepAddInput) -> WellLabelledPath:
    """Append label k (shifting labels >= k up by one) and a final step chosen by b."""
    k = inp.k
    labels = tuple(x + (x >= k) for x in inp.path.labels) + (k,)
    last = inp.b - 1 if k > labels[-2] else inp.b
    return WellLabelledPath(inp.path.steps + (last,), labels)


def add_step_inv(path: WellLabelledPath) -> StepAddInput:
    if path.size < 2 or classify(path) is PathClass.NEITHER:
        raise NotInImageClass(f"{path} is neither positive nor Motzkin of size >= 2")
    k = path.labels[-1]
    labels = tuple(x - (x > k) for x in path.labels[:-1])
    last = path.steps[-1]
    b = last + 1 if k > path.labels[-2] else last
    return StepAddInput(WellLabelledPath(path.steps[:-1], labels), k, b)
