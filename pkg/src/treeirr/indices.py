"""Degree-based topological and irregularity indices on simple graphs.

All values are exact: six of the seven indices are nonnegative integers, and
the total-sigma variant keeps its literal 1/2 factor as a ``Fraction``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import combinations

from .graphs import SimpleGraph, degrees

__all__ = ["IndexKind", "compute_index", "compute_all"]


class IndexKind(Enum):
    IRR = "irr"            # sum over edges of |d_u - d_v|
    SIGMA = "sigma"        # sum over edges of (d_u - d_v)^2
    M1 = "m1"              # sum over vertices of d_v^2
    M2 = "m2"              # sum over edges of d_u * d_v
    FORGOTTEN = "forgotten"  # sum over vertices of d_v^3
    IRR_TOTAL = "irr_total"  # sum over unordered vertex pairs of |d_u - d_v|
    SIGMA_TOTAL = "sigma_total"  # 1/2 * sum over unordered pairs of (d_u - d_v)^2

    @classmethod
    def from_name(cls, name: str) -> "IndexKind":
        key = name.strip().lower()
        for kind in cls:
            if kind.value == key:
                return kind
        raise KeyError(f"unknown index {name!r}; choose from "
                       + ", ".join(k.value for k in cls))


def compute_index(g: SimpleGraph, kind: IndexKind) -> int | Fraction:
    """Evaluate one index on ``g`` (any simple graph, connected or not)."""
    deg = degrees(g)
    if kind is IndexKind.IRR:
        return sum(abs(deg[u] - deg[v]) for u, v in g.edges)
    if kind is IndexKind.SIGMA:
        return sum((deg[u] - deg[v]) ** 2 for u, v in g.edges)
    if kind is IndexKind.M1:
        return sum(d * d for d in deg)
    if kind is IndexKind.M2:
        return sum(deg[u] * deg[v] for u, v in g.edges)
    if kind is IndexKind.FORGOTTEN:
        return sum(d ** 3 for d in deg)
    if kind is IndexKind.IRR_TOTAL:
        return sum(abs(a - b) for a, b in combinations(deg, 2))
    if kind is IndexKind.SIGMA_TOTAL:
        return Fraction(sum((a - b) ** 2 for a, b in combinations(deg, 2)), 2)
    raise TypeError(f"unhandled index kind {kind!r}")


def compute_all(g: SimpleGraph) -> dict[IndexKind, int | Fraction]:
    """All seven indices in one pass over degrees and edges."""
    deg = degrees(g)
    irr = sigma = m2 = 0
    for u, v in g.edges:
        diff = deg[u] - deg[v]
        irr += abs(diff)
        sigma += diff * diff
        m2 += deg[u] * deg[v]
    irr_total = pair_sq = 0
    for a, b in combinations(deg, 2):
        irr_total += abs(a - b)
        pair_sq += (a - b) ** 2
    return {
        IndexKind.IRR: irr,
        IndexKind.SIGMA: sigma,
        IndexKind.M1: sum(d * d for d in deg),
        IndexKind.M2: m2,
        IndexKind.FORGOTTEN: sum(d ** 3 for d in deg),
        IndexKind.IRR_TOTAL: irr_total,
        IndexKind.SIGMA_TOTAL: Fraction(pair_sq, 2),
    }
