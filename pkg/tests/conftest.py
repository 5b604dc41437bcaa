"""Shared helpers for the test suite."""

from __future__ import annotations

from itertools import permutations

from treeirr import SimpleGraph, enumerate_trees, EnumerationMode
from treeirr.degseq import all_tree_sequences
from treeirr.extremal import HARD_ENUM_CAP


def iso_trees(n: int) -> list[SimpleGraph]:
    """One representative per isomorphism class of trees on n vertices."""
    out: list[SimpleGraph] = []
    for seq in all_tree_sequences(n):
        out.extend(enumerate_trees(seq, EnumerationMode.UP_TO_ISO,
                                   cap=HARD_ENUM_CAP))
    return out


def brute_force_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    """Isomorphism by trying every vertex bijection (small n only)."""
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    eb = b.edges
    for perm in permutations(range(a.n)):
        mapped = frozenset(tuple(sorted((perm[u], perm[v])))
                           for u, v in a.edges)
        if mapped == eb:
            return True
    return False
