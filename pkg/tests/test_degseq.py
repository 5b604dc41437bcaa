"""Degree sequences: realizability, Erdős–Gallai, power means, generation."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

import pytest

from treeirr import (
    DegreeSequence,
    Orientation,
    all_tree_sequences,
    erdos_gallai_check,
    is_tree_realizable,
    power_mean_inequality_check,
)
from treeirr.errors import CapExceededError, DomainError, ParseError


def test_normalization_and_presentation():
    d = DegreeSequence((3, 1, 2), Orientation.NON_INCREASING)
    assert d.values == (1, 2, 3)
    assert d.presented() == (3, 2, 1)
    d2 = DegreeSequence.parse("3,2,1", Orientation.NON_DECREASING)
    assert d2.presented() == (1, 2, 3)


def test_parse_errors():
    with pytest.raises(ParseError):
        DegreeSequence.parse("3,two,1")
    with pytest.raises(ValueError):
        DegreeSequence((1, -1))


def test_tree_realizability():
    assert is_tree_realizable(DegreeSequence((0,)))
    assert is_tree_realizable(DegreeSequence((1, 1)))
    assert is_tree_realizable(DegreeSequence((3, 1, 1, 1)))
    assert not is_tree_realizable(DegreeSequence((2, 2, 2)))   # cycle only
    assert not is_tree_realizable(DegreeSequence((1,)))
    assert not is_tree_realizable(DegreeSequence((2, 1, 1, 0)))


def _graphic_multisets(n: int) -> set[tuple[int, ...]]:
    """Degree multisets of every simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    out: set[tuple[int, ...]] = set()
    for mask in range(1 << len(pairs)):
        degs = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                degs[u] += 1
                degs[v] += 1
        out.add(tuple(sorted(degs)))
    return out


def test_erdos_gallai_matches_brute_force():
    # every degree multiset with n <= 5, entries <= n-1
    for n in range(2, 6):
        graphic = _graphic_multisets(n)
        for values in combinations_with_replacement(range(n), n):
            got = erdos_gallai_check(DegreeSequence(values))
            assert got == (values in graphic), values


def test_power_mean_inequality():
    # holds with equality on regular sequences, strictly otherwise
    assert power_mean_inequality_check(DegreeSequence((2, 2, 2, 2)), 3)
    assert power_mean_inequality_check(DegreeSequence((3, 1, 1, 1)), 2)
    assert power_mean_inequality_check(DegreeSequence((3, 2, 2, 1, 1, 1)), 5)
    with pytest.raises(DomainError):
        power_mean_inequality_check(DegreeSequence((5, 1, 1, 1)), 2)
    with pytest.raises(DomainError):
        power_mean_inequality_check(DegreeSequence((1, 1)), 0)


def test_all_tree_sequences_counts_and_order():
    # number of tree-degree multisets on n vertices = partitions of n-2
    # into parts (shifted), known values for small n
    counts = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5, 7: 7, 8: 11}
    for n, want in counts.items():
        seqs = all_tree_sequences(n)
        assert len(seqs) == want
        assert all(is_tree_realizable(s) for s in seqs)
        ordered = [s.values for s in seqs]
        assert ordered == sorted(ordered)
    with pytest.raises(CapExceededError):
        all_tree_sequences(13)
    with pytest.raises(CapExceededError):
        all_tree_sequences(0)
