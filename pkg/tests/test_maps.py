from mapscope.maps import (
    CombinatorialMap,
    DOUBLED_EDGE_NO_2FACE_MAP,
    FOUR_EDGE_MAPS,
    SINGLE_EDGE_MAP,
    canonical_code,
    face_degrees,
    faces,
    format_map,
    has_multiple_edges,
    internal_2face_count,
    is_nonseparable,
    is_valid_map,
    parse_map,
    tree_to_map,
    validate_map,
    vertex_orbits,
)
from mapscope.trees import enumerate_trees, parse_tree, tree_stats

import pytest

# the six maps on four edges against their trees, in enumeration-friendly order
PAIRED_TREES = [
    "(1 (1 (1 (1))))",
    "(1 (1 (1) (1)))",
    "(2 (2 (1) (1)))",
    "(2 (1) (1 (1)))",
    "(2 (1 (1)) (1))",
    "(3 (1) (1) (1))",
]


def test_single_edge_map():
    assert validate_map(SINGLE_EDGE_MAP) == "ok"
    assert face_degrees(SINGLE_EDGE_MAP) == (2,)
    assert len(vertex_orbits(SINGLE_EDGE_MAP)) == 2


def test_reference_maps_are_valid_and_nonseparable():
    for m in FOUR_EDGE_MAPS:
        assert validate_map(m) == "ok"
        assert is_nonseparable(m)
    assert len({canonical_code(m) for m in FOUR_EDGE_MAPS}) == 6


def test_reference_pairing():
    'tree_to_map reproduces each reference map, up to root-preserving relabeling'
    for text, m in zip(PAIRED_TREES, FOUR_EDGE_MAPS):
        assert canonical_code(tree_to_map(parse_tree(text))) == canonical_code(m)


def test_parallel_bundle_two_faces():
    assert internal_2face_count(FOUR_EDGE_MAPS[0]) == 3
    assert internal_2face_count(tree_to_map(parse_tree("(1 (1))"))) == 1


def test_doubled_edge_map_is_two_face_free():
    m = DOUBLED_EDGE_NO_2FACE_MAP
    assert validate_map(m) == "ok"
    assert has_multiple_edges(m)
    assert all(d != 2 for d in face_degrees(m))
    witness = parse_tree("(2 (1) (1 (1 (1) (1))))")
    assert canonical_code(tree_to_map(witness)) == canonical_code(m)


def test_table_one_statistics():
    'edges = nodes, vertices = leaves + 1, faces = internal + 1, root face = root label + 1'
    for n in range(1, 7):
        for t in enumerate_trees(n):
            st = tree_stats(t)
            m = tree_to_map(t)
            rep = faces(m)
            assert m.n_darts == 2 * st.nodes
            assert len(vertex_orbits(m)) == st.leaves + 1
            assert len(rep.faces) == st.internal_nodes + 1
            root_deg = rep.faces[rep.root_face_index][1]
            assert root_deg == st.root_label + 1


def test_codes_distinct_per_size():
    for n in range(1, 7):
        codes = {canonical_code(tree_to_map(t)) for t in enumerate_trees(n)}
        assert len(codes) == len(enumerate_trees(n))


def test_worked_example_two_faces():
    big = parse_tree("(4 (2 (1 (1)) (1) (1)) (1) (1 (2 (1) (1))))")
    assert internal_2face_count(tree_to_map(big)) == 2


def test_format_parse_roundtrip():
    for t in enumerate_trees(5):
        m = tree_to_map(t)
        assert parse_map(format_map(m)) == m


def test_multiple_edges():
    digon = tree_to_map(parse_tree("(1 (1))"))
    assert has_multiple_edges(digon)
    four_cycle = tree_to_map(parse_tree("(3 (1) (1) (1))"))
    assert not has_multiple_edges(four_cycle)


def test_validate_rejects_bad_maps():
    assert validate_map(CombinatorialMap(3, (1, 0, 2), (0, 1, 2), 0)) != "ok"
    # alpha with a fixed point
    assert validate_map(CombinatorialMap(2, (0, 1), (0, 1), 0)) != "ok"
    # two disjoint digons: involution fine, not transitive
    m = CombinatorialMap(
        8,
        (1, 0, 3, 2, 5, 4, 7, 6),
        (2, 3, 0, 1, 6, 7, 4, 5),
        0,
    )
    assert not is_valid_map(m)


def test_path_map_is_separable():
    # two edges joined at a middle vertex
    m = CombinatorialMap(4, (1, 0, 3, 2), (0, 2, 1, 3), 0)
    assert validate_map(m) == "ok"
    assert not is_nonseparable(m)


def test_nonseparability_matches_enumeration():
    for n in range(2, 7):
        for t in enumerate_trees(n):
            assert is_nonseparable(tree_to_map(t))
