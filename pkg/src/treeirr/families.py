"""Constructors for the named graph families with closed-form index values.

All builders label deterministically: spine/center vertices first, pendant
leaves afterwards in construction order, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderTooSmallError, ParseError, SpecInvalidError
from .graphs import SimpleGraph, graph_from_edge_list

__all__ = [
    "CaterpillarSpec",
    "build_star",
    "build_path",
    "build_double_star",
    "build_complete_bipartite",
    "build_caterpillar",
    "build_uniform_caterpillar",
    "parse_family",
]


@dataclass(frozen=True)
class CaterpillarSpec:
    """Ordered spine-degree assignment (d_1, ..., d_k) defining a caterpillar.

    End entries must be >= 1 and interior entries >= 2; each spine vertex i
    receives enough pendant leaves to reach degree d_i exactly (for k >= 2).
    """

    spine: tuple[int, ...]

    def __post_init__(self):
        if len(self.spine) < 1:
            raise SpecInvalidError("spine must have at least one vertex")
        if any(d < 1 for d in self.spine):
            raise SpecInvalidError("spine degrees must be >= 1")
        if any(d < 2 for d in self.spine[1:-1]):
            raise SpecInvalidError("interior spine degrees must be >= 2")

    @property
    def k(self) -> int:
        return len(self.spine)


def build_star(n: int) -> SimpleGraph:
    """Star S_n: vertex 0 adjacent to the other n - 1 vertices."""
    if n < 2:
        raise OrderTooSmallError(f"star needs n >= 2, got {n}")
    return graph_from_edge_list(n, [(0, v) for v in range(1, n)])


def build_path(n: int) -> SimpleGraph:
    """Path 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise OrderTooSmallError(f"path needs n >= 1, got {n}")
    return graph_from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def build_double_star(k: int, r: int) -> SimpleGraph:
    """Double star S_{r,k}: adjacent centers of degrees k and r, rest leaves.

    Center 0 carries k - 1 leaves and center 1 carries r - 1 leaves, so the
    order is k + r.
    """
    if k < 1 or r < 1:
        raise OrderTooSmallError("double star needs k >= 1 and r >= 1")
    n = k + r
    pairs = [(0, 1)]
    nxt = 2
    for _ in range(k - 1):
        pairs.append((0, nxt))
        nxt += 1
    for _ in range(r - 1):
        pairs.append((1, nxt))
        nxt += 1
    return graph_from_edge_list(n, pairs)


def build_complete_bipartite(m: int, n: int) -> SimpleGraph:
    """K_{m,n} with sides {0..m-1} and {m..m+n-1}."""
    if m < 1 or n < 1:
        raise OrderTooSmallError("complete bipartite needs m >= 1 and n >= 1")
    return graph_from_edge_list(
        m + n, [(i, m + j) for i in range(m) for j in range(n)])


def build_caterpillar(spec: CaterpillarSpec) -> SimpleGraph:
    """Caterpillar with the given spine-degree assignment.

    End spine vertices get d_i - 1 pendants and interior ones d_i - 2, so for
    k >= 2 the spine vertex degrees are exactly the spec values.  A singleton
    spine (d,) degenerates to a star with d - 1 leaves.
    """
    k = spec.k
    pairs = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, d in enumerate(spec.spine):
        cnt = d - 1 if i in (0, k - 1) else d - 2
        for _ in range(cnt):
            pairs.append((i, nxt))
            nxt += 1
    return graph_from_edge_list(nxt, pairs)


def build_uniform_caterpillar(k: int, m: int) -> SimpleGraph:
    """Spine of k vertices, each carrying exactly m pendant leaves."""
    if k < 1 or m < 0:
        raise OrderTooSmallError("uniform caterpillar needs k >= 1, m >= 0")
    pairs = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i in range(k):
        for _ in range(m):
            pairs.append((i, nxt))
            nxt += 1
    return graph_from_edge_list(nxt, pairs)


def parse_family(text: str) -> SimpleGraph:
    """Parse the CLI family grammar.

    Forms: ``star:n``, ``path:n``, ``dstar:k,r``, ``kmn:m,n``,
    ``cat:d1-d2-...-dk``, ``ucat:k,m``.
    """
    try:
        name, _, arg = text.partition(":")
        if not arg:
            raise ValueError("missing parameters")
        if name == "star":
            return build_star(int(arg))
        if name == "path":
            return build_path(int(arg))
        if name == "dstar":
            k, r = (int(x) for x in arg.split(","))
            return build_double_star(k, r)
        if name == "kmn":
            m, n = (int(x) for x in arg.split(","))
            return build_complete_bipartite(m, n)
        if name == "cat":
            spine = tuple(int(x) for x in arg.split("-"))
            return build_caterpillar(CaterpillarSpec(spine))
        if name == "ucat":
            k, m = (int(x) for x in arg.split(","))
            return build_uniform_caterpillar(k, m)
        raise ValueError(f"unknown family {name!r}")
    except (ValueError, SpecInvalidError, OrderTooSmallError) as exc:
        raise ParseError(f"bad family spec {text!r}: {exc}") from exc
