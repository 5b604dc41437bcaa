"""Index definitions and cross-index identities."""

from __future__ import annotations

from fractions import Fraction

import pytest

from treeirr import IndexKind, compute_all, compute_index
from treeirr.families import build_complete_bipartite, build_path, build_star
from treeirr.graphs import degrees

from conftest import iso_trees


def test_star_values():
    s4 = build_star(4)
    vals = compute_all(s4)
    assert vals[IndexKind.IRR] == 6
    assert vals[IndexKind.SIGMA] == 12
    assert vals[IndexKind.M1] == 12
    assert vals[IndexKind.M2] == 9
    assert vals[IndexKind.FORGOTTEN] == 30
    assert compute_index(build_star(5), IndexKind.IRR) == 12


def test_path_values():
    p3 = build_path(3)
    assert compute_index(p3, IndexKind.SIGMA) == 2
    assert compute_index(p3, IndexKind.FORGOTTEN) == 10
    assert compute_index(p3, IndexKind.M2) == 4


def test_complete_bipartite_sigma():
    assert compute_index(build_complete_bipartite(2, 3), IndexKind.SIGMA) == 6


def test_sigma_total_is_exact_fraction():
    v = compute_index(build_star(4), IndexKind.SIGMA_TOTAL)
    assert isinstance(v, Fraction)
    assert v == Fraction(3 * 4, 2)  # three center-leaf pairs, (3-1)^2 each


def test_index_names_round_trip():
    for kind in IndexKind:
        assert IndexKind.from_name(kind.value) is kind
    with pytest.raises(Exception):
        IndexKind.from_name("nope")


def test_identities_over_all_small_trees():
    for n in range(2, 8):
        for t in iso_trees(n):
            vals = compute_all(t)
            degs = degrees(t)
            # handshake and vertex-sum forms
            assert sum(degs) == 2 * len(t.edges)
            assert vals[IndexKind.M1] == sum(d * d for d in degs)
            assert vals[IndexKind.FORGOTTEN] == sum(d ** 3 for d in degs)
            # sigma = F - 2 M2, and sigma is even
            assert (vals[IndexKind.SIGMA]
                    == vals[IndexKind.FORGOTTEN] - 2 * vals[IndexKind.M2])
            assert vals[IndexKind.SIGMA] % 2 == 0
            # |x| <= x^2 for integer degree gaps, edgewise
            assert vals[IndexKind.IRR] <= vals[IndexKind.SIGMA]
            # total-irregularity dominates the edge-only sum
            assert vals[IndexKind.IRR_TOTAL] >= vals[IndexKind.IRR]
            # sigma_total pairs formula agrees with a direct recomputation
            pair_sq = sum((degs[u] - degs[v]) ** 2
                          for u in range(t.n) for v in range(u + 1, t.n))
            assert vals[IndexKind.SIGMA_TOTAL] == Fraction(pair_sq, 2)
