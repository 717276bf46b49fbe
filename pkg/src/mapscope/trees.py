"""beta(1,0)-trees: rooted plane trees with positive integer labels.

A beta(1,0)-tree is a rooted plane (ordered) tree in which every leaf has
label 1, the root's label equals the sum of its children's labels, and every
other node's label lies between 1 and the sum of its children's labels.  The
tree with a single node has label 1 (by the leaf rule) and is treated as
neither decomposable nor indecomposable.

Label-maximality convention used throughout the package: a node *has maximum
label* iff it is a leaf, or its label equals the sum of its children's
labels.  (A leaf can only carry label 1, which is also the largest label it
could carry; the map-side cross-checks in `mapscope.verify` validate the
convention.)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

__all__ = [
    "LabeledTree",
    "TreeStats",
    "leaf",
    "node",
    "children_sum",
    "max_label_value",
    "has_max_label",
    "validate_tree",
    "is_valid_tree",
    "enumerate_trees",
    "enumerate_restricted_trees",
    "count_trees",
    "tree_stats",
    "is_primitive_tree",
    "is_k_face_free_tree",
    "mef_necessary",
    "has_no_only_children",
    "parse_tree",
    "format_tree",
    "iter_subtrees",
]


@dataclass(frozen=True)
class LabeledTree:
    """Immutable rooted plane tree with a positive integer label per node."""

    label: int
    children: tuple["LabeledTree", ...] = ()

    def __repr__(self) -> str:
        return f"LabeledTree({format_tree(self)!r})"


@dataclass(frozen=True)
class TreeStats:
    nodes: int
    leaves: int
    internal_nodes: int
    root_label: int
    single_child_max_nodes: int
    decomposable: bool


def leaf() -> LabeledTree:
    return LabeledTree(1, ())


def node(label: int, children) -> LabeledTree:
    return LabeledTree(label, tuple(children))


def children_sum(t: LabeledTree) -> int:
    return sum(c.label for c in t.children)


def max_label_value(t: LabeledTree) -> int:
    """Largest label the node could legally carry: children-sum, or 1 for a leaf."""
    return children_sum(t) if t.children else 1


def has_max_label(t: LabeledTree) -> bool:
    return not t.children or t.label == children_sum(t)


def iter_subtrees(t: LabeledTree) -> Iterator[LabeledTree]:
    """All subtrees of t in preorder (t itself first)."""
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        stack.extend(reversed(s.children))


def _path_str(path: tuple[int, ...]) -> str:
    return "root" if not path else "root." + ".".join(map(str, path))


def validate_tree(t: LabeledTree) -> str:
    """Return "ok", or a description of the first violated invariant.

    Nodes are addressed by the path of child indices from the root, e.g.
    "root.0.2" is the third child of the root's first child.
    """

    def walk(s: LabeledTree, path: tuple[int, ...]) -> Optional[str]:
        if not isinstance(s.label, int) or s.label < 1:
            return f"{_path_str(path)}: label {s.label!r} is not a positive integer"
        if not s.children:
            if s.label != 1:
                return f"{_path_str(path)}: leaf label {s.label} != 1"
            return None
        total = children_sum(s)
        if not path and s.label != total:
            return f"{_path_str(path)}: root label {s.label} != children sum {total}"
        if path and s.label > total:
            return f"{_path_str(path)}: label {s.label} exceeds children sum {total}"
        for i, c in enumerate(s.children):
            msg = walk(c, path + (i,))
            if msg is not None:
                return msg
        return None

    return walk(t, ()) or "ok"


def is_valid_tree(t: LabeledTree) -> bool:
    return validate_tree(t) == "ok"


def _require_valid(t: LabeledTree) -> None:
    msg = validate_tree(t)
    if msg != "ok":
        raise ValueError(f"invalid tree: {msg}")


# ---------------------------------------------------------------------------
# Enumeration
#
# Order contract: subtree-size compositions of the children are generated in
# lexicographic order; for a fixed composition the child choices vary
# rightmost-fastest; for non-root internal nodes the label loop is innermost
# and ascending.  This makes every enumerator's output order reproducible.
# ---------------------------------------------------------------------------


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n >= 1 into positive parts, lexicographically."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _subtrees_free_top(n: int) -> tuple[LabeledTree, ...]:
    """All n-node trees valid below a parent: top label ranges over 1..children-sum."""
    if n == 1:
        return (leaf(),)
    out: list[LabeledTree] = []
    for comp in _compositions(n - 1):
        for kids in _product_choices(comp):
            top = sum(c.label for c in kids)
            for lab in range(1, top + 1):
                out.append(LabeledTree(lab, kids))
    return tuple(out)


def _product_choices(comp: tuple[int, ...]) -> Iterator[tuple[LabeledTree, ...]]:
    if not comp:
        yield ()
        return
    for head in _subtrees_free_top(comp[0]):
        for tail in _product_choices(comp[1:]):
            yield (head,) + tail


def enumerate_trees(nodes: int) -> list[LabeledTree]:
    """All beta(1,0)-trees with exactly `nodes` nodes, in the documented order."""
    if nodes < 1:
        raise ValueError("empty tree not modeled")
    if nodes == 1:
        return [leaf()]
    out: list[LabeledTree] = []
    for comp in _compositions(nodes - 1):
        for kids in _product_choices(comp):
            out.append(LabeledTree(sum(c.label for c in kids), kids))
    return out


def count_trees(nodes: int) -> int:
    """Number of beta(1,0)-trees with exactly `nodes` nodes.

    >>> [count_trees(n) for n in range(1, 7)]
    [1, 1, 2, 6, 22, 91]
    """
    return len(enumerate_trees(nodes))


def enumerate_restricted_trees(
    nodes: int, label_cap: int, forbid_only_children: bool
) -> list[LabeledTree]:
    """Trees whose non-root labels are <= label_cap, optionally with no only children.

    The cap does not apply to the root.  With forbid_only_children, no node of
    the tree (root included) has exactly one child.  Generated by a pruned
    recursion rather than filtering `enumerate_trees`, so large caps stay cheap.
    """
    if nodes < 1:
        raise ValueError("empty tree not modeled")
    if label_cap < 1:
        raise ValueError("label_cap must be >= 1")
    if nodes == 1:
        return [leaf()]

    @lru_cache(maxsize=None)
    def sub(n: int) -> tuple[LabeledTree, ...]:
        # n-node subtrees hanging below some parent, capped top label.
        if n == 1:
            return (leaf(),)
        out: list[LabeledTree] = []
        for comp in _compositions(n - 1):
            if forbid_only_children and len(comp) == 1:
                continue
            for kids in _choices(comp):
                top = sum(c.label for c in kids)
                for lab in range(1, min(top, label_cap) + 1):
                    out.append(LabeledTree(lab, kids))
        return tuple(out)

    def _choices(comp: tuple[int, ...]) -> Iterator[tuple[LabeledTree, ...]]:
        if not comp:
            yield ()
            return
        for head in sub(comp[0]):
            for tail in _choices(comp[1:]):
                yield (head,) + tail

    out: list[LabeledTree] = []
    for comp in _compositions(nodes - 1):
        if forbid_only_children and len(comp) == 1:
            continue
        for kids in _choices(comp):
            out.append(LabeledTree(sum(c.label for c in kids), kids))
    sub.cache_clear()
    return out


# ---------------------------------------------------------------------------
# Statistics and predicates
# ---------------------------------------------------------------------------


def tree_stats(t: LabeledTree) -> TreeStats:
    """Node counts, root label, and the single-child-with-maximum-label count.

    single_child_max_nodes counts nodes u != root such that u is its parent's
    only child and u has maximum label (leaves count as maximum).
    """
    _require_valid(t)
    nodes = leaves = scm = 0

    def walk(s: LabeledTree) -> None:
        nonlocal nodes, leaves, scm
        nodes += 1
        if not s.children:
            leaves += 1
        if len(s.children) == 1 and has_max_label(s.children[0]):
            scm += 1
        for c in s.children:
            walk(c)

    walk(t)
    return TreeStats(
        nodes=nodes,
        leaves=leaves,
        internal_nodes=nodes - leaves,
        root_label=t.label,
        single_child_max_nodes=scm,
        decomposable=len(t.children) >= 2,
    )


def is_primitive_tree(t: LabeledTree) -> bool:
    """True iff no node has a single child carrying maximum label."""
    _require_valid(t)
    return all(
        not (len(s.children) == 1 and has_max_label(s.children[0]))
        for s in iter_subtrees(t)
    )


def _deficit(t: LabeledTree) -> int:
    """How far the node's label sits below its maximum (0 for leaves)."""
    return max_label_value(t) - t.label


def is_k_face_free_tree(t: LabeledTree, k: int) -> bool:
    """True iff the corresponding map has no face of degree k (root face included).

    Encoded rule: (a) no node -- root included -- with m children,
    1 <= m <= k-1, whose children's deficits sum to k-m-1; (b) root label
    != k-1.  A node with m children and total child deficit d creates an
    internal face of degree 1+m+d, and the root face has degree root label
    + 1, which is what the two rules test.  Cross-validated against direct
    face computation on the constructed maps in `mapscope.verify`.
    """
    if k not in (2, 3, 4):
        raise ValueError(f"k must be 2, 3 or 4, got {k!r}")
    _require_valid(t)
    if t.label == k - 1:
        return False
    for s in iter_subtrees(t):
        m = len(s.children)
        if 1 <= m <= k - 1 and sum(_deficit(c) for c in s.children) == k - m - 1:
            return False
    return True


def mef_necessary(t: LabeledTree) -> bool:
    """Necessary conditions for the corresponding map to be multiple-edge-free.

    Avoids all three structures: a node with a single maximum-label child,
    root label 1, and a node with a single child labeled 1.  Necessary but
    not sufficient; and the one-edge map is the usual boundary exception
    (its tree fails the root-label rule yet the map has no multiple edge).
    """
    _require_valid(t)
    if t.label == 1:
        return False
    for s in iter_subtrees(t):
        if len(s.children) == 1:
            c = s.children[0]
            if has_max_label(c) or c.label == 1:
                return False
    return True


def has_no_only_children(t: LabeledTree) -> bool:
    """True iff no node of t (root included) has exactly one child."""
    _require_valid(t)
    return all(len(s.children) != 1 for s in iter_subtrees(t))


# ---------------------------------------------------------------------------
# Text format: "(label child child ...)", e.g. "(2 (1) (1))"
# ---------------------------------------------------------------------------


def format_tree(t: LabeledTree) -> str:
    if not t.children:
        return f"({t.label})"
    return f"({t.label} " + " ".join(format_tree(c) for c in t.children) + ")"


def parse_tree(text: str) -> LabeledTree:
    """Parse the parenthesized tree format; raises ValueError with a position."""
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def fail(expected: str):
        raise ValueError(f"parse error at position {pos}: expected {expected}")

    def parse_node() -> LabeledTree:
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != "(":
            fail("'('")
        pos += 1
        skip_ws()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            fail("integer label")
        label = int(text[start:pos])
        kids = []
        skip_ws()
        while pos < n and text[pos] == "(":
            kids.append(parse_node())
            skip_ws()
        if pos >= n or text[pos] != ")":
            fail("')'")
        pos += 1
        return LabeledTree(label, tuple(kids))

    out = parse_node()
    skip_ws()
    if pos != n:
        fail("end of input")
    return out
