"""Simple-graph values, tree checks, the Prufer codec and tree canonicalization.

Vertices are dense 0-indexed integers.  Edges are stored as a frozenset of
ordered pairs ``(u, v)`` with ``u < v``, so two graphs compare equal exactly
when they are label-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush, heapify
from typing import Iterable, Sequence

from .errors import (
    LengthMismatchError,
    NotATreeError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
)

__all__ = [
    "SimpleGraph",
    "graph_from_edge_list",
    "degrees",
    "is_tree",
    "prufer_decode",
    "prufer_encode",
    "canonical_form",
    "tree_center",
    "parse_edge_list",
    "format_edge_list",
]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: a vertex count plus a set of unordered edges."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a graph on ``n`` vertices, deduplicating edges.

    Raises:
        SelfLoopError: if some pair has equal endpoints.
        VertexOutOfRangeError: if an endpoint is negative or >= n.
    """
    if n < 0:
        raise VertexOutOfRangeError(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside range [0, {n})")
        edges.add((u, v) if u < v else (v, u))
    return SimpleGraph(n, frozenset(edges))


def degrees(g: SimpleGraph) -> list[int]:
    """Degree of every vertex, indexed by label."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_tree(g: SimpleGraph) -> bool:
    """True iff ``g`` is connected with exactly n - 1 edges (n >= 1)."""
    if g.n == 0 or len(g.edges) != g.n - 1:
        return False
    adj = g.adjacency()
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def prufer_decode(code: Sequence[int], n: int) -> SimpleGraph:
    """Decode a Prufer code of length n - 2 into a labeled tree on n vertices.

    Vertex ``i`` ends up with degree ``count_i(code) + 1``.
    """
    if n < 2:
        raise LengthMismatchError(f"Prufer codes are defined for n >= 2, got n={n}")
    if len(code) != n - 2:
        raise LengthMismatchError(f"expected code length {n - 2}, got {len(code)}")
    deg = [1] * n
    for x in code:
        if not (0 <= x < n):
            raise VertexOutOfRangeError(f"code symbol {x} outside range [0, {n})")
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapify(leaves)
    edges = []
    for x in code:
        leaf = heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return SimpleGraph(n, frozenset(edges))


def prufer_encode(t: SimpleGraph) -> list[int]:
    """Encode a labeled tree (n >= 2) into its Prufer code."""
    if not is_tree(t) or t.n < 2:
        raise NotATreeError("prufer_encode requires a tree with n >= 2")
    n = t.n
    adj = [set(nbrs) for nbrs in t.adjacency()]
    deg = [len(a) for a in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heappop(leaves)
        parent = next(iter(adj[leaf]))
        code.append(parent)
        adj[parent].discard(leaf)
        adj[leaf].clear()
        deg[parent] -= 1
        if deg[parent] == 1:
            heappush(leaves, parent)
    return code


def tree_center(t: SimpleGraph) -> list[int]:
    """The one or two central vertices of a tree, found by leaf stripping."""
    if not is_tree(t):
        raise NotATreeError("tree_center requires a tree")
    if t.n <= 2:
        return list(range(t.n))
    adj = [set(nbrs) for nbrs in t.adjacency()]
    remaining = t.n
    layer = [v for v in range(t.n) if len(adj[v]) == 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            parent = next(iter(adj[leaf]))
            adj[parent].discard(leaf)
            adj[leaf].clear()
            if len(adj[parent]) == 1:
                nxt.append(parent)
        layer = nxt
    return sorted(layer)


def _ahu_encode(adj: list[list[int]], root: int) -> bytes:
    # Iterative post-order; children encodings are sorted so the result is
    # invariant under relabeling.
    enc: dict[int, bytes] = {}
    stack: list[tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, parent, done = stack.pop()
        if done:
            parts = sorted(enc[w] for w in adj[v] if w != parent)
            enc[v] = b"(" + b"".join(parts) + b")"
        else:
            stack.append((v, parent, True))
            for w in adj[v]:
                if w != parent:
                    stack.append((w, v, False))
    return enc[root]


def canonical_form(t: SimpleGraph) -> bytes:
    """Order-invariant encoding of an unlabeled tree (AHU, rooted at center).

    Two trees get equal forms iff they are isomorphic.  Bicentral trees are
    encoded from both central roots and the lexicographically smaller string
    is kept.
    """
    if not is_tree(t):
        raise NotATreeError("canonical_form requires a tree")
    adj = t.adjacency()
    return min(_ahu_encode(adj, c) for c in tree_center(t))


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the edge-list text format: first line ``n``, then ``u v`` lines.

    ``#`` starts a comment; blank lines are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    pairs = []
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer endpoint in {line!r}") from exc
    return graph_from_edge_list(n, pairs)


def format_edge_list(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
