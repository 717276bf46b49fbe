"""Permutations, pattern matching, and the tree <-> permutation bijection.

Permutations are tuples of the integers 1..n in one-line notation; the empty
tuple is the empty permutation.  Three pattern flavors are supported:

* classical: a plain tuple, matched as a subsequence up to order isomorphism;
* vincular: `VincularPattern(base, adjacent)` where `adjacent` holds indices i
  (1-based) meaning base positions i and i+1 must sit next to each other in
  the occurrence;
* mesh: `MeshPattern(base, shaded)` where shaded cells (column, row) forbid
  any letter of the host permutation from the corresponding region around the
  occurrence (column/row 0 are left of/below the occurrence).

The class Av(3142, 2-41-3) is in bijection with beta(1,0)-trees: a tree on
n+1 nodes corresponds to a permutation of length n (the single-node tree to
the empty permutation).  Decomposable trees map to direct sums; an
indecomposable tree with root label a maps to the insertion of a new largest
letter before the a-th left-to-right maximum, rearranged as in
`insert_largest`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .trees import LabeledTree, children_sum, validate_tree

__all__ = [
    "Permutation",
    "MeshPattern",
    "VincularPattern",
    "M",
    "M_PRIME",
    "N",
    "INDEC",
    "INS1",
    "INS2",
    "P3142",
    "P2413_VINC",
    "flatten",
    "lr_maxima",
    "components",
    "direct_sum",
    "is_indecomposable",
    "occurrences",
    "occurrence_positions",
    "avoids",
    "in_class",
    "generate_av",
    "insert_largest",
    "tree_to_perm",
    "perm_to_tree",
    "is_primitive_perm",
    "reduce_to_primitive",
    "one_step_expansions",
    "parse_perm",
    "format_perm",
    "parse_mesh_pattern",
    "format_mesh_pattern",
]

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class MeshPattern:
    base: Permutation
    shaded: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class VincularPattern:
    base: Permutation
    adjacent: frozenset[int]


# Built-in patterns.  Cells are (column, row) with 0 = leftmost / bottom.
M = MeshPattern((2, 1), frozenset({(1, 0), (1, 1), (1, 2), (2, 1)}))
M_PRIME = MeshPattern((2, 1), M.shaded | {(0, 2), (2, 2)})
N = MeshPattern((1,), frozenset({(0, 0), (0, 1), (1, 1)}))
INDEC = MeshPattern((1, 2), frozenset({(0, 1), (0, 2), (1, 1), (1, 2), (2, 0)}))
INS1 = MeshPattern((2, 1), frozenset({(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)}))
INS2 = MeshPattern((2, 1), frozenset({(0, 0), (1, 0), (1, 1), (1, 2), (2, 1)}))
P3142: Permutation = (3, 1, 4, 2)
P2413_VINC = VincularPattern((2, 4, 1, 3), frozenset({2}))


def flatten(word) -> Permutation:
    """Order-isomorphic relabeling onto 1..k, e.g. (5, 2, 7) -> (2, 1, 3)."""
    order = sorted(word)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in word)


def lr_maxima(pi: Permutation) -> list[int]:
    """Positions (1-based) of the left-to-right maxima.

    >>> lr_maxima((2, 5, 3, 1, 4))
    [1, 2]
    """
    out = []
    best = 0
    for i, v in enumerate(pi, start=1):
        if v > best:
            best = v
            out.append(i)
    return out


def components(pi: Permutation) -> list[Permutation]:
    """Split into indecomposable components of the direct sum, flattened."""
    out = []
    start = 0
    best = 0
    for i, v in enumerate(pi, start=1):
        best = max(best, v)
        if best == i:
            out.append(flatten(pi[start:i]))
            start = i
    return out


def direct_sum(*parts: Permutation) -> Permutation:
    out: list[int] = []
    shift = 0
    for p in parts:
        out.extend(v + shift for v in p)
        shift += len(p)
    return tuple(out)


def is_indecomposable(pi: Permutation) -> bool:
    return len(pi) > 0 and len(components(pi)) == 1


# ---------------------------------------------------------------------------
# Pattern matching
# ---------------------------------------------------------------------------


def _mesh_occurrence_ok(
    pat: MeshPattern, pi: Permutation, positions: tuple[int, ...]
) -> bool:
    """positions are 0-based indices into pi, already order-isomorphic to base."""
    n = len(pi)
    k = len(pat.base)
    values = sorted(pi[p] for p in positions)
    col_edges = (-1,) + positions + (n,)  # occurrence splits positions into k+1 gaps
    row_edges = (0,) + tuple(values) + (n + 1,)
    for a, b in pat.shaded:
        lo_p, hi_p = col_edges[a], col_edges[a + 1]
        lo_v, hi_v = row_edges[b], row_edges[b + 1]
        for j in range(lo_p + 1, hi_p):
            if lo_v < pi[j] < hi_v:
                return False
    return True


def occurrence_positions(pattern, pi: Permutation) -> list[tuple[int, ...]]:
    """All occurrences as tuples of 0-based positions, lexicographically."""
    if isinstance(pattern, MeshPattern):
        base = pattern.base
    elif isinstance(pattern, VincularPattern):
        base = pattern.base
    else:
        base = tuple(pattern)
    k = len(base)
    if k == 0:
        # The empty base still carries its shading: cell (0,0) is the whole grid.
        if isinstance(pattern, MeshPattern) and not _mesh_occurrence_ok(
            pattern, pi, ()
        ):
            return []
        return [()]
    out = []
    for positions in combinations(range(len(pi)), k):
        if flatten(tuple(pi[p] for p in positions)) != base:
            continue
        if isinstance(pattern, VincularPattern):
            if not all(
                positions[i - 1] + 1 == positions[i] for i in pattern.adjacent
            ):
                continue
        elif isinstance(pattern, MeshPattern):
            if not _mesh_occurrence_ok(pattern, pi, positions):
                continue
        out.append(positions)
    return out


def occurrences(pattern, pi: Permutation) -> int:
    """Number of occurrences of a classical, vincular, or mesh pattern."""
    return len(occurrence_positions(pattern, pi))


def avoids(pi: Permutation, patterns) -> bool:
    return all(occurrences(p, pi) == 0 for p in patterns)


def in_class(pi: Permutation) -> bool:
    """Membership in Av(3142, 2-41-3)."""
    return avoids(pi, (P3142, P2413_VINC))


def _require_member(pi: Permutation) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"not a permutation of 1..{len(pi)}: {pi!r}")
    if not in_class(pi):
        raise ValueError(f"not (3142,2-41-3)-avoiding: {format_perm(pi)}")


# ---------------------------------------------------------------------------
# Structural generation of Av(3142, 2-41-3)
# ---------------------------------------------------------------------------


def insert_largest(pi: Permutation, which_lr_max: int) -> Permutation:
    """Insert n+1 before the given left-to-right maximum and rearrange.

    >>> insert_largest((1, 2), 2)
    (2, 3, 1)
    >>> insert_largest((2, 3, 1), 1)
    (4, 2, 3, 1)

    Writing the inserted word as A + (B, n+1, C) where A collects all
    direct-sum components except the last, the result is B~ A~ (n+1) C~ --
    same positions block-wise, with the letters of B and C keeping their
    mutual order at the bottom and every letter of A lifted above them.
    The result is an indecomposable member of the class.
    """
    n = len(pi)
    if n == 0:
        if which_lr_max != 1:
            raise ValueError("the empty permutation admits only insertion index 1")
        return (1,)
    maxima = lr_maxima(pi)
    if not 1 <= which_lr_max <= len(maxima):
        raise ValueError(
            f"which_lr_max {which_lr_max} out of range 1..{len(maxima)}"
        )
    q = maxima[which_lr_max - 1]  # 1-based position in pi
    sigma = pi[: q - 1] + (n + 1,) + pi[q - 1 :]
    comps = components(sigma)
    last = comps[-1]
    a_len = n + 1 - len(last)
    a_part = sigma[:a_len]  # already the values 1..a_len
    r = last.index(len(last))  # n+1 sits at this index within the last component
    b_part = sigma[a_len : a_len + r]
    c_part = sigma[a_len + r + 1 :]
    bc = flatten(b_part + c_part)
    b_flat, c_flat = bc[: len(b_part)], bc[len(b_part) :]
    lift = len(b_part) + len(c_part)
    return (
        b_flat
        + tuple(v + lift for v in flatten(a_part))
        + (n + 1,)
        + c_flat
    )


def generate_av(n: int) -> list[Permutation]:
    """All members of Av(3142, 2-41-3) of length n, sorted lexicographically.

    Built structurally: members are direct sums of indecomposable members,
    and each indecomposable member of length m is insert_largest applied to
    a member of length m-1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    av: list[list[Permutation]] = [[()]]
    indec: list[list[Permutation]] = [[]]
    for m in range(1, n + 1):
        new_indec = set()
        for pi in av[m - 1]:
            t = max(1, len(lr_maxima(pi)))
            for j in range(1, t + 1):
                new_indec.add(insert_largest(pi, j))
        indec.append(sorted(new_indec))
        members = set()
        for first_len in range(1, m + 1):
            for head in indec[first_len]:
                for tail in av[m - first_len]:
                    members.add(direct_sum(head, tail))
        av.append(sorted(members))
    return av[n]


# ---------------------------------------------------------------------------
# Bijection with beta(1,0)-trees
# ---------------------------------------------------------------------------


def tree_to_perm(t: LabeledTree) -> Permutation:
    """Tree on n+1 nodes -> class member of length n (single node -> empty)."""
    msg = validate_tree(t)
    if msg != "ok":
        raise ValueError(f"invalid tree: {msg}")
    return _ttp(t)


def _ttp(t: LabeledTree) -> Permutation:
    if not t.children:
        return ()
    if len(t.children) >= 2:
        hung = (
            LabeledTree(c.label, (c,)) for c in t.children
        )
        return direct_sum(*(_ttp(h) for h in hung))
    child = t.children[0]
    a = t.label
    if not child.children:
        return (1,)
    relabeled = LabeledTree(children_sum(child), child.children)
    return insert_largest(_ttp(relabeled), a)


def perm_to_tree(pi: Permutation) -> LabeledTree:
    """Inverse of tree_to_perm; raises for non-members."""
    _require_member(pi)
    return _ptt(pi)


def _ptt(pi: Permutation) -> LabeledTree:
    if not pi:
        return LabeledTree(1, ())
    comps = components(pi)
    if len(comps) >= 2:
        kids = []
        for comp in comps:
            sub = _ptt(comp)
            kids.append(sub.children[0])
        return LabeledTree(sum(c.label for c in kids), tuple(kids))
    if pi == (1,):
        return LabeledTree(1, (LabeledTree(1, ()),))
    n = len(pi)
    r = pi.index(n)  # 0-based position of the largest letter
    c_part = pi[r + 1 :]
    prefix = pi[:r]
    # A~ is the longest suffix of the prefix holding exactly the values
    # n-a .. n-1; everything else in the prefix is B~.
    a_len = 0
    for cand in range(len(prefix), -1, -1):
        tail = prefix[len(prefix) - cand :]
        if sorted(tail) == list(range(n - cand, n)):
            a_len = cand
            break
    b_part = prefix[: len(prefix) - a_len]
    a_part = prefix[len(prefix) - a_len :]
    lift = len(a_part)
    sigma = (
        flatten(a_part)
        + tuple(v + lift for v in flatten(b_part + c_part)[: len(b_part)])
        + (n,)
        + tuple(v + lift for v in flatten(b_part + c_part)[len(b_part) :])
    )
    q = len(a_part) + len(b_part) + 1  # 1-based position of n in sigma
    reduced = sigma[: q - 1] + sigma[q:]
    maxima = lr_maxima(reduced)
    if q not in maxima:
        raise ValueError(f"not in the image of the insertion step: {format_perm(pi)}")
    j = maxima.index(q) + 1  # n was inserted before this LR-max
    sub = _ptt(reduced)
    child = LabeledTree(j, sub.children)
    return LabeledTree(j, (child,))


# ---------------------------------------------------------------------------
# Primitive permutations: mesh pattern M, reduction, and expansion
# ---------------------------------------------------------------------------


def is_primitive_perm(pi: Permutation) -> bool:
    """Class member with no occurrence of the mesh pattern M."""
    _require_member(pi)
    return occurrences(M, pi) == 0


def reduce_to_primitive(pi: Permutation) -> Permutation:
    """Remove the smaller letter of the leftmost M-occurrence until M-free.

    Every intermediate word is checked to stay in the class.
    """
    _require_member(pi)
    current = pi
    while True:
        occs = occurrence_positions(M, current)
        if not occs:
            return current
        i, j = occs[0]
        current = flatten(current[:j] + current[j + 1 :])
        if not in_class(current):
            raise AssertionError(
                f"reduction left the class at {format_perm(current)}"
            )


def one_step_expansions(pi: Permutation) -> list[Permutation]:
    """All class members reachable by inserting one smaller letter.

    A new letter y is inserted immediately after an existing letter x so that
    the new descent xy is an occurrence of M at that spot and the result
    stays in the class; this inverts one M-occurrence removal, and repeating
    it from the primitive members regenerates the whole class.  (INS1 and
    INS2 accept a strict subset of these insertions -- each carries one extra
    shaded cell on the left column -- and that subset does not regenerate the
    class: 1342 is reachable from 123 only through the wider rule.)  Sorted
    lexicographically.
    """
    _require_member(pi)
    n = len(pi)
    out = set()
    for i in range(n):  # insert right after position i (0-based)
        for y in range(1, pi[i] + 1):
            bumped = tuple(v if v < y else v + 1 for v in pi)
            sigma = bumped[: i + 1] + (y,) + bumped[i + 1 :]
            if not _mesh_occurrence_ok(M, sigma, (i, i + 1)):
                continue
            if in_class(sigma):
                out.add(sigma)
    return sorted(out)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def format_perm(pi: Permutation) -> str:
    """Space-separated one-line notation; the empty permutation prints as "e"."""
    return " ".join(map(str, pi)) if pi else "e"


def parse_perm(text: str) -> Permutation:
    """Parse space-separated ranks; compact digit form accepted for n <= 9."""
    text = text.strip()
    if not text or text == "e":
        return ()
    if " " in text:
        try:
            values = tuple(int(tok) for tok in text.split())
        except ValueError:
            raise ValueError(f"malformed permutation: {text!r}") from None
    elif text.isdigit():
        values = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"malformed permutation: {text!r}")
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"not a permutation of 1..{len(values)}: {text!r}")
    return values


def format_mesh_pattern(pat: MeshPattern) -> str:
    cells = ",".join(f"({a},{b})" for a, b in sorted(pat.shaded))
    return "".join(map(str, pat.base)) + "/" + cells


def parse_mesh_pattern(text: str) -> MeshPattern:
    """Parse "21/(1,0),(1,1),(1,2),(2,1)" into a MeshPattern."""
    base_txt, _, cells_txt = text.partition("/")
    base = parse_perm(base_txt.strip())
    cells = set()
    rest = cells_txt.strip()
    if rest:
        for m in re.finditer(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", rest):
            cells.add((int(m.group(1)), int(m.group(2))))
        if not cells:
            raise ValueError(f"malformed cell list: {cells_txt!r}")
    return MeshPattern(base, frozenset(cells))
