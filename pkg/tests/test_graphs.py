"""Graph core: construction, tree tests, Prüfer codes, canonical forms."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeirr import (
    canonical_form,
    degrees,
    graph_from_edge_list,
    is_tree,
    parse_edge_list,
    prufer_decode,
    prufer_encode,
)
from treeirr.errors import (
    NotATreeError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from treeirr.graphs import format_edge_list, tree_center

from conftest import brute_force_isomorphic, iso_trees


def test_construction_normalizes_and_dedups():
    g = graph_from_edge_list(3, [(1, 0), (0, 1), (1, 2)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert degrees(g) == [1, 2, 1]


def test_construction_rejects_self_loops_and_bad_labels():
    with pytest.raises(SelfLoopError):
        graph_from_edge_list(2, [(0, 0)])
    with pytest.raises(VertexOutOfRangeError):
        graph_from_edge_list(2, [(0, 2)])
    with pytest.raises(VertexOutOfRangeError):
        graph_from_edge_list(2, [(-1, 0)])


def test_is_tree():
    assert is_tree(graph_from_edge_list(1, []))
    assert is_tree(graph_from_edge_list(2, [(0, 1)]))
    assert not is_tree(graph_from_edge_list(3, [(0, 1)]))          # forest
    assert not is_tree(graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))


def test_prufer_decode_known_code():
    # code (3, 3, 3, 4) on n=6: vertices 3 and 4 are the internal ones
    t = prufer_decode((3, 3, 3, 4), 6)
    assert is_tree(t)
    assert degrees(t) == [1, 1, 1, 4, 2, 1]


def test_prufer_round_trip_small():
    rng = random.Random(7)
    for n in range(3, 9):
        for _ in range(50):
            code = tuple(rng.randrange(n) for _ in range(n - 2))
            t = prufer_decode(code, n)
            assert is_tree(t)
            assert tuple(prufer_encode(t)) == code


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 10).flatmap(
    lambda n: st.tuples(st.just(n),
                        st.lists(st.integers(0, n - 1),
                                 min_size=n - 2, max_size=n - 2))))
def test_prufer_degree_law(pair):
    # vertex i has degree 1 + (multiplicity of i in the code)
    n, code = pair
    t = prufer_decode(code, n)
    assert is_tree(t)
    for v, d in enumerate(degrees(t)):
        assert d == 1 + code.count(v)


def test_prufer_encode_rejects_non_tree():
    with pytest.raises(NotATreeError):
        prufer_encode(graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))


def test_tree_center():
    path5 = graph_from_edge_list(5, [(i, i + 1) for i in range(4)])
    assert tree_center(path5) == [2]
    path4 = graph_from_edge_list(4, [(i, i + 1) for i in range(3)])
    assert sorted(tree_center(path4)) == [1, 2]


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(11)
    for n in range(2, 8):
        for _ in range(20):
            code = tuple(rng.randrange(n) for _ in range(n - 2))
            t = prufer_decode(code, n)
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = graph_from_edge_list(
                n, [(perm[u], perm[v]) for u, v in t.edges])
            assert canonical_form(t) == canonical_form(relabeled)


def test_canonical_form_matches_brute_force_isomorphism():
    # within an order, equal canonical form must coincide with true
    # isomorphism checked by exhausting vertex bijections
    for n in range(2, 8):
        reps = iso_trees(n)
        for i, a in enumerate(reps):
            for b in reps[i:]:
                same = canonical_form(a) == canonical_form(b)
                assert same == brute_force_isomorphic(a, b)


def test_edge_list_parse_and_format_round_trip():
    text = "4\n# a comment\n0 1\n1 2\n1 3\n"
    g = parse_edge_list(text)
    assert g.n == 4
    assert g.sorted_edges() == [(0, 1), (1, 2), (1, 3)]
    assert parse_edge_list(format_edge_list(g)).edges == g.edges


def test_edge_list_parse_errors():
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError):
        parse_edge_list("notanint\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("2\n0 1 2\n")
