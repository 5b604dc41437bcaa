"""Enumeration per degree sequence and exact extremal search."""

from __future__ import annotations

from math import factorial

import pytest

from treeirr import (
    DegreeSequence,
    EnumerationMode,
    IndexKind,
    canonical_form,
    compute_index,
    count_labeled_trees,
    degrees,
    enumerate_trees,
    extremal_index,
    is_tree,
    spine_permutation_extremal,
)
from treeirr.degseq import all_tree_sequences
from treeirr.errors import CapExceededError, NotRealizableError
from treeirr.extremal import (
    merge_extremal,
    prescribed_max_ordering,
    prescribed_min_ordering,
    spine_is_valid,
    _scan_partition,
)


def test_count_labeled_trees():
    assert count_labeled_trees(DegreeSequence((3, 2, 1, 1, 1))) == 3
    assert count_labeled_trees(DegreeSequence((1, 1))) == 1
    with pytest.raises(NotRealizableError):
        count_labeled_trees(DegreeSequence((2, 2, 2)))


def test_enumerate_labeled_matches_count():
    for n in range(2, 8):
        for seq in all_tree_sequences(n):
            got = sum(1 for _ in enumerate_trees(seq, EnumerationMode.LABELED))
            assert got == count_labeled_trees(seq), seq.values


def test_enumerate_labeled_fixes_degree_assignment():
    seq = DegreeSequence((1, 1, 1, 2, 3))
    for t in enumerate_trees(seq, EnumerationMode.LABELED):
        assert is_tree(t)
        assert tuple(degrees(t)) == seq.values


def test_enumerate_iso_yields_distinct_forms():
    seq = DegreeSequence((3, 2, 2, 2, 1, 1, 1))
    forms = [canonical_form(t)
             for t in enumerate_trees(seq, EnumerationMode.UP_TO_ISO)]
    assert len(forms) == len(set(forms))


def test_enumeration_caps():
    seq = DegreeSequence(tuple([2] * 8 + [1, 1]))  # path on 10 vertices
    with pytest.raises(CapExceededError):
        list(enumerate_trees(seq, EnumerationMode.LABELED))  # default cap 9
    got = sum(1 for _ in enumerate_trees(seq, EnumerationMode.UP_TO_ISO,
                                         cap=12))
    assert got == 1


def test_extremal_regression():
    d = DegreeSequence((4, 2, 2, 1, 1, 1, 1))
    sig = extremal_index(d, IndexKind.SIGMA)
    assert (sig.min_value, sig.max_value) == (28, 32)
    irr = extremal_index(d, IndexKind.IRR)
    assert (irr.min_value, irr.max_value) == (12, 12)
    assert sig.count_iso == 2
    assert sig.count_labeled == count_labeled_trees(d)
    # witnesses actually realize the recorded extremes
    for t in sig.min_witness_graphs:
        assert compute_index(t, IndexKind.SIGMA) == 28
    for t in sig.max_witness_graphs:
        assert compute_index(t, IndexKind.SIGMA) == 32


def test_extremal_deterministic_and_parallel_agree():
    d = DegreeSequence((3, 3, 2, 1, 1, 1, 1))
    a = extremal_index(d, IndexKind.SIGMA)
    b = extremal_index(d, IndexKind.SIGMA)
    c = extremal_index(d, IndexKind.SIGMA, workers=3)
    for other in (b, c):
        assert a.min_value == other.min_value
        assert a.max_value == other.max_value
        assert a.count_labeled == other.count_labeled
        assert a.count_iso == other.count_iso
        assert a.min_witnesses == other.min_witnesses
        assert a.max_witnesses == other.max_witnesses


def test_merge_extremal_associative():
    d = DegreeSequence((3, 2, 2, 2, 1, 1, 1))
    parts = [_scan_partition(d, IndexKind.SIGMA, 4, first)
             for first in range(d.n) if d.values[first] > 1]
    left = merge_extremal(merge_extremal(parts[0], parts[1]), parts[2])
    right = merge_extremal(parts[0], merge_extremal(parts[1], parts[2]))
    assert left.min_value == right.min_value
    assert left.max_value == right.max_value
    assert left.count_labeled == right.count_labeled


def test_prescribed_orderings():
    assert prescribed_min_ordering((4, 2, 3)) == (2, 3, 4)
    assert prescribed_max_ordering((4, 2, 3)) == (3, 2, 4)
    assert prescribed_max_ordering((5, 4, 3, 2, 1)) == (4, 2, 3, 1, 5)
    assert spine_is_valid((1, 2, 1))
    assert not spine_is_valid((2, 1, 2))


def test_spine_permutation_extremal():
    res = spine_permutation_extremal(DegreeSequence((2, 3, 4)), IndexKind.IRR)
    # brute force over the valid orderings of {2,3,4}
    from treeirr import CaterpillarSpec, build_caterpillar
    from itertools import permutations
    vals = {}
    for p in set(permutations((2, 3, 4))):
        if spine_is_valid(p):
            vals[p] = int(compute_index(
                build_caterpillar(CaterpillarSpec(p)), IndexKind.IRR))
    assert res.min_value == min(vals.values())
    assert res.max_value == max(vals.values())
    assert res.count_valid == len(vals)
    assert res.max_prescribed_attains
    assert res.min_prescribed_attains


def test_cayley_totals():
    # summing the labeled count over multisets, weighted by the number of
    # distinct degree assignments, recovers n^(n-2)
    from collections import Counter
    for n in range(3, 9):
        total = 0
        for seq in all_tree_sequences(n):
            orderings = factorial(n)
            for c in Counter(seq.values).values():
                orderings //= factorial(c)
            total += count_labeled_trees(seq) * orderings
        assert total == n ** (n - 2)
