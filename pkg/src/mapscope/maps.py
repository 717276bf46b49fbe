"""Rooted planar maps as dart-based rotation systems.

A map is a pair of permutations on darts 0..n_darts-1: `alpha` (the
fixed-point-free involution pairing the two darts of each edge) and `sigma`
(the counterclockwise successor around the dart's source vertex), plus a
distinguished root dart.  Vertices are the sigma-orbits, edges the
alpha-orbits, faces the orbits of phi = sigma o alpha; the face to the right
of a dart is its phi-orbit, so the root face (drawn as the outer face) is the
phi-orbit of the root dart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .trees import LabeledTree, children_sum, validate_tree

__all__ = [
    "CombinatorialMap",
    "FaceReport",
    "validate_map",
    "is_valid_map",
    "faces",
    "face_degrees",
    "is_nonseparable",
    "has_multiple_edges",
    "canonical_code",
    "tree_to_map",
    "internal_2face_count",
    "parse_map",
    "format_map",
    "vertex_orbits",
    "SINGLE_EDGE_MAP",
    "FOUR_EDGE_MAPS",
    "DOUBLED_EDGE_NO_2FACE_MAP",
]


@dataclass(frozen=True)
class CombinatorialMap:
    n_darts: int
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    root: int

    def phi(self, d: int) -> int:
        """Next dart along the face to the right of d."""
        return self.sigma[self.alpha[d]]


@dataclass(frozen=True)
class FaceReport:
    faces: tuple[tuple[tuple[int, ...], int], ...]  # (dart cycle, degree)
    root_face_index: int
    degree_histogram: tuple[int, ...]  # sorted degrees


def _orbits(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


def vertex_orbits(m: CombinatorialMap) -> list[tuple[int, ...]]:
    """Sigma-orbits; the i-th orbit is vertex i."""
    return _orbits(m.sigma)


def validate_map(m: CombinatorialMap) -> str:
    """Return "ok" or the first violated invariant."""
    n = m.n_darts
    if n <= 0 or n % 2:
        return f"n_darts {n} is not a positive even count"
    for name, p in (("alpha", m.alpha), ("sigma", m.sigma)):
        if len(p) != n or sorted(p) != list(range(n)):
            return f"{name} is not a permutation of 0..{n - 1}"
    if not 0 <= m.root < n:
        return f"root dart {m.root} out of range"
    for d in range(n):
        if m.alpha[d] == d:
            return f"alpha not fixed-point-free (dart {d})"
        if m.alpha[m.alpha[d]] != d:
            return f"alpha not an involution (dart {d})"
    # Transitivity of <alpha, sigma> on darts.
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for e in (m.alpha[d], m.sigma[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    if len(seen) != n:
        return "map not connected (alpha,sigma not transitive on darts)"
    phi = tuple(m.sigma[m.alpha[d]] for d in range(n))
    v = len(_orbits(m.sigma))
    f = len(_orbits(phi))
    e = n // 2
    if v - e + f != 2:
        return f"not planar: V-E+F = {v}-{e}+{f} = {v - e + f} != 2"
    return "ok"


def is_valid_map(m: CombinatorialMap) -> bool:
    return validate_map(m) == "ok"


def _require_valid(m: CombinatorialMap) -> None:
    msg = validate_map(m)
    if msg != "ok":
        raise ValueError(f"invalid map: {msg}")


def faces(m: CombinatorialMap) -> FaceReport:
    _require_valid(m)
    phi = tuple(m.sigma[m.alpha[d]] for d in range(m.n_darts))
    orbs = _orbits(phi)
    root_idx = next(i for i, orb in enumerate(orbs) if m.root in orb)
    return FaceReport(
        faces=tuple((orb, len(orb)) for orb in orbs),
        root_face_index=root_idx,
        degree_histogram=tuple(sorted(len(orb) for orb in orbs)),
    )


def face_degrees(m: CombinatorialMap) -> tuple[int, ...]:
    """Sorted degrees of all faces (root face included)."""
    return faces(m).degree_histogram


def internal_2face_count(m: CombinatorialMap) -> int:
    """Number of non-root faces of degree 2."""
    rep = faces(m)
    return sum(
        1
        for i, (_, deg) in enumerate(rep.faces)
        if deg == 2 and i != rep.root_face_index
    )


def _dart_vertex(m: CombinatorialMap) -> list[int]:
    """dart -> vertex id (sigma-orbit index)."""
    out = [-1] * m.n_darts
    for i, orb in enumerate(_orbits(m.sigma)):
        for d in orb:
            out[d] = i
    return out


def is_nonseparable(m: CombinatorialMap) -> bool:
    """No loops and no cut vertices (and at least one edge)."""
    _require_valid(m)
    at = _dart_vertex(m)
    n_vertices = max(at) + 1
    edges = []  # (u, v) per edge, indexed by edge id
    for d in range(0, m.n_darts):
        if d < m.alpha[d]:
            u, v = at[d], at[m.alpha[d]]
            if u == v:
                return False  # loop
            edges.append((u, v))
    if n_vertices <= 2:
        return True  # a single edge or a bundle of parallels has no cut vertex
    # Iterative articulation-point search (Tarjan lowlinks, multigraph-aware:
    # the edge back to the parent is skipped by edge id, so parallel edges
    # count as cycles).
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    disc = [-1] * n_vertices
    low = [0] * n_vertices
    timer = 0
    root_children = 0
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # (vertex, via edge id, iter idx)
    order: list[tuple[int, int]] = []
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, via, idx = stack.pop()
        if idx < len(adj[v]):
            stack.append((v, via, idx + 1))
            w, eid = adj[v][idx]
            if eid == via:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                order.append((v, w))
                stack.append((w, eid, 0))
            else:
                low[v] = min(low[v], disc[w])
    if timer != n_vertices:
        return False  # underlying graph disconnected (cannot happen for valid maps)
    for v, w in reversed(order):
        low[v] = min(low[v], low[w])
        if v != 0 and low[w] >= disc[v]:
            return False  # v is an articulation point
    if root_children > 1:
        return False
    return True


def has_multiple_edges(m: CombinatorialMap) -> bool:
    """True iff two distinct edges share the same unordered endpoint pair."""
    _require_valid(m)
    at = _dart_vertex(m)
    seen = set()
    for d in range(m.n_darts):
        if d < m.alpha[d]:
            key = frozenset((at[d], at[m.alpha[d]]))
            if key in seen:
                return True
            seen.add(key)
    return False


def canonical_code(m: CombinatorialMap) -> bytes:
    """Complete rooted-isomorphism invariant.

    Breadth-first traversal over darts from the root, visiting sigma-successor
    then alpha-mate, relabels darts by first-visit rank; the code lists each
    dart's sigma- and alpha-image in those ranks, which reconstructs the map
    up to dart relabeling.
    """
    _require_valid(m)
    rank = {m.root: 0}
    order = [m.root]
    head = 0
    while head < len(order):
        d = order[head]
        head += 1
        for e in (m.sigma[d], m.alpha[d]):
            if e not in rank:
                rank[e] = len(order)
                order.append(e)
    flat = []
    for d in order:
        flat.append(rank[m.sigma[d]])
        flat.append(rank[m.alpha[d]])
    return b",".join(str(x).encode() for x in flat)


# ---------------------------------------------------------------------------
# Tree -> map construction
# ---------------------------------------------------------------------------


class _Builder:
    """Grow-only dart store used while assembling a map bottom-up."""

    def __init__(self) -> None:
        self.alpha: list[int] = []
        self.sigma: list[int] = []

    def new_edge(self) -> tuple[int, int]:
        a = len(self.alpha)
        b = a + 1
        self.alpha.extend((b, a))
        self.sigma.extend((a, b))  # each dart starts alone at its vertex
        return a, b


def tree_to_map(t: LabeledTree) -> CombinatorialMap:
    """The recursive bijection from beta(1,0)-trees to rooted non-separable maps.

    A leaf becomes the single-edge map, rooted at the dart pointing from the
    root vertex to the starred vertex.  An internal node glues its children's
    maps star-to-root-vertex in order, adds a new root edge from the last
    child's starred vertex to the first child's root vertex, and (for
    non-root nodes with label i) stars the i-th vertex counterclockwise from
    the root vertex along the new root face.  Corners -- (dart, sigma(dart))
    pairs facing the outer face -- are carried explicitly so each splice is a
    constant-time rotation update.
    """
    msg = validate_tree(t)
    if msg != "ok":
        raise ValueError(f"invalid tree: {msg}")
    b = _Builder()

    def build(s: LabeledTree, is_root: bool):
        # Returns (root_dart, R_corner, star_corner); star_corner is None for
        # the global root.
        if not s.children:
            d, e = b.new_edge()
            return d, (d, d), (e, e)
        parts = [build(c, False) for c in s.children]
        # Glue star(M_j) to the root vertex of M_{j+1}.
        for (_, _, star_j), (_, r_next, _) in zip(parts, parts[1:]):
            p, q = star_j
            p2, q2 = r_next
            b.sigma[p] = q2
            b.sigma[p2] = q
        # New root edge from star(M_m) to R(M_1).
        u_dart, v_dart = b.new_edge()
        p, q = parts[-1][2]
        b.sigma[p] = u_dart
        b.sigma[u_dart] = q
        p, q = parts[0][1]
        b.sigma[p] = v_dart
        b.sigma[v_dart] = q
        root_dart = u_dart
        # Walk the new root face once; it has degree children-sum + 1.
        walk = [root_dart]
        d = b.sigma[b.alpha[root_dart]]
        while d != root_dart:
            walk.append(d)
            d = b.sigma[b.alpha[d]]
        r_corner = (b.alpha[walk[-1]], walk[0])
        if is_root:
            return root_dart, r_corner, None
        i = s.label  # star the i-th vertex counterclockwise after the root vertex
        star_corner = (b.alpha[walk[i - 1]], walk[i])
        return root_dart, r_corner, star_corner

    root_dart, _, _ = build(t, True)
    return CombinatorialMap(
        n_darts=len(b.alpha),
        alpha=tuple(b.alpha),
        sigma=tuple(b.sigma),
        root=root_dart,
    )


# ---------------------------------------------------------------------------
# Text format: JSON object {"n_darts": ..., "alpha": [...], "sigma": [...],
# "root": ...}
# ---------------------------------------------------------------------------


def format_map(m: CombinatorialMap) -> str:
    return json.dumps(
        {
            "n_darts": m.n_darts,
            "alpha": list(m.alpha),
            "sigma": list(m.sigma),
            "root": m.root,
        },
        separators=(", ", ": "),
    )


def parse_map(text: str) -> CombinatorialMap:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed map record: {exc}") from None
    try:
        m = CombinatorialMap(
            n_darts=int(obj["n_darts"]),
            alpha=tuple(int(x) for x in obj["alpha"]),
            sigma=tuple(int(x) for x in obj["sigma"]),
            root=int(obj["root"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed map record: {exc}") from None
    msg = validate_map(m)
    if msg != "ok":
        raise ValueError(f"invalid map: {msg}")
    return m


# ---------------------------------------------------------------------------
# Hand-encoded fixtures (rotations read off the standard drawings)
# ---------------------------------------------------------------------------

SINGLE_EDGE_MAP = CombinatorialMap(2, (1, 0), (0, 1), 0)

# The six rooted non-separable maps on four edges, in the conventional order
# matching the six four-node trees.  Darts 2i, 2i+1 belong to edge i.
FOUR_EDGE_MAPS = (
    # four parallel edges on two vertices, rooted at the topmost edge
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (2, 5, 6, 1, 0, 7, 4, 3), 3
    ),
    # theta-like: top arc, middle path, bottom root arc
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (6, 5, 0, 4, 3, 7, 2, 1), 6
    ),
    # path plus spanning top arc, rooted at the lower right arc
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (5, 6, 1, 7, 3, 0, 2, 4), 6
    ),
    # path plus doubled right edge, rooted at the spanning top arc
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (7, 4, 1, 5, 2, 6, 3, 0), 6
    ),
    # path plus doubled left edge, rooted at the spanning top arc
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (2, 4, 7, 1, 3, 6, 5, 0), 6
    ),
    # the 4-cycle, rooted at the spanning top arc
    CombinatorialMap(
        8, (1, 0, 3, 2, 5, 4, 7, 6), (7, 2, 1, 4, 3, 6, 5, 0), 6
    ),
)

# Six-edge 2-face-free map with a doubled edge: vertices L, M, R, T; edges
# e1 = upper L-R arc, e2 = L-M, e3 = M-R, e4 = R-T (root), e5 = T-L,
# e6 = lower L-R arc.  Darts 2i, 2i+1 belong to edge i+1, first dart at the
# first-named endpoint.
DOUBLED_EDGE_NO_2FACE_MAP = CombinatorialMap(
    12,
    (1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10),
    (9, 5, 0, 4, 3, 11, 1, 8, 7, 10, 2, 6),
    6,
)
