"""Named tree families and the family spec grammar."""

from __future__ import annotations

import pytest

from treeirr import (
    CaterpillarSpec,
    IndexKind,
    build_caterpillar,
    build_complete_bipartite,
    build_double_star,
    build_path,
    build_star,
    build_uniform_caterpillar,
    canonical_form,
    compute_index,
    degrees,
    is_tree,
    parse_family,
)
from treeirr.errors import OrderTooSmallError, ParseError, SpecInvalidError


def test_star_and_path_shapes():
    s = build_star(6)
    assert sorted(degrees(s)) == [1, 1, 1, 1, 1, 5]
    p = build_path(5)
    assert sorted(degrees(p)) == [1, 1, 2, 2, 2]
    assert is_tree(s) and is_tree(p)


def test_double_star_degrees_and_sigma():
    g = build_double_star(4, 3)
    assert sorted(degrees(g), reverse=True)[:2] == [4, 3]
    # centers degree k and r; sigma has the closed form below for all k,r >= 1
    for k in range(1, 13):
        for r in range(1, k + 1):
            g = build_double_star(k, r)
            want = (k - 1) ** 3 + k ** 2 + (r - 1) ** 3 + r ** 2 - 2 * k * r
            assert compute_index(g, IndexKind.SIGMA) == want, (k, r)


def test_single_spine_caterpillar_is_star():
    # a singleton spine (d,) degenerates to the star with d - 1 leaves
    a = build_caterpillar(CaterpillarSpec((5,)))
    assert canonical_form(a) == canonical_form(build_star(5))


def test_caterpillar_spine_degrees_recovered():
    spine = (3, 4, 2, 5)
    t = build_caterpillar(CaterpillarSpec(spine))
    degs = degrees(t)
    assert tuple(degs[:4]) == spine
    assert all(d == 1 for d in degs[4:])
    assert t.n == sum(spine) - len(spine) + 2


def test_caterpillar_spec_validation():
    with pytest.raises(SpecInvalidError):
        CaterpillarSpec((2, 1, 2))       # interior degree below 2
    with pytest.raises(SpecInvalidError):
        CaterpillarSpec((0, 2))
    with pytest.raises(SpecInvalidError):
        CaterpillarSpec(())


def test_uniform_caterpillar():
    t = build_uniform_caterpillar(3, 2)
    assert t.n == 9
    assert sorted(degrees(t), reverse=True) == [4, 3, 3, 1, 1, 1, 1, 1, 1]
    with pytest.raises(OrderTooSmallError):
        build_uniform_caterpillar(0, 2)


def test_complete_bipartite():
    g = build_complete_bipartite(2, 3)
    assert g.n == 5
    assert len(g.edges) == 6
    assert sorted(degrees(g)) == [2, 2, 2, 3, 3]
    # K_{1,n} is the star on n+1 vertices
    assert canonical_form(build_complete_bipartite(1, 5)) \
        == canonical_form(build_star(6))


def test_parse_family_grammar():
    assert canonical_form(parse_family("star:5")) \
        == canonical_form(build_star(5))
    assert parse_family("path:4").n == 4
    assert parse_family("dstar:3,2").n == 5
    assert parse_family("kmn:2,3").n == 5
    assert parse_family("cat:3-2-3").n == 7
    assert parse_family("ucat:2,2").n == 6
    for bad in ("star:", "star:x", "nope:3", "cat:2-1-2", "dstar:3", ""):
        with pytest.raises(ParseError):
            parse_family(bad)
