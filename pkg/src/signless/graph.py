"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable: the adjacency matrix is stored densely as a read-only
``uint8`` array and the degree data is computed once at construction.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Optional

import numpy as np


class Graph:
    """Immutable simple graph with cached degree data."""

    __slots__ = ("_adj", "_degrees", "_m", "_nbrs")

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=np.uint8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if np.any(adj > 1):
            raise ValueError("adjacency entries must be 0 or 1")
        if np.any(np.diagonal(adj)):
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.flags.writeable = False
        self._adj = adj
        degrees = adj.sum(axis=1, dtype=np.int64)
        self._degrees = tuple(int(d) for d in degrees)
        self._m = sum(self._degrees) // 2
        self._nbrs = tuple(tuple(np.flatnonzero(row).tolist()) for row in adj)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only 0/1 adjacency matrix."""
        return self._adj

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    @property
    def second_max_degree(self) -> Optional[int]:
        """Second entry of the non-increasing degree sequence (``None`` if n < 2)."""
        if self.n < 2:
            return None
        return sorted(self._degrees, reverse=True)[1]

    @property
    def min_degree(self) -> int:
        return min(self._degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        rows, cols = np.nonzero(np.triu(self._adj, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def __reduce__(self):
        return (Graph, (self._adj,))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges collapse to one."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = 1
    return Graph(adj)


def complement(g: Graph) -> Graph:
    adj = 1 - g.adjacency
    np.fill_diagonal(adj, 0)
    return Graph(adj)


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover ``g x K2`` (tensor product with K2).

    Vertex ``(v, 0)`` is labelled ``v`` and ``(v, 1)`` is labelled ``v + n``;
    each edge ``uv`` of ``g`` yields edges ``(u,0)-(v,1)`` and ``(u,1)-(v,0)``.
    """
    n = g.n
    adj = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    adj[:n, n:] = g.adjacency
    adj[n:, :n] = g.adjacency
    return Graph(adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # The null graph counts as connected.
    return len(components(g)) <= 1


def bipartition(g: Graph) -> Optional[list[int]]:
    """Return a proper 2-colouring (list of 0/1 per vertex) or ``None``."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def eccentricities(g: Graph) -> list[float]:
    ecc = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        ecc.append(math.inf if min(dist) < 0 else max(dist))
    return ecc


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` for disconnected graphs."""
    if g.n == 0:
        return 0
    return max(eccentricities(g))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_empty(g: Graph) -> bool:
    return g.m == 0


def is_star(g: Graph) -> bool:
    """True for ``K_{1,n-1}`` with ``n >= 2``."""
    n = g.n
    return n >= 2 and g.m == n - 1 and g.max_degree == n - 1


# Named families. Each builder returns the canonical labelled instance.

def complete_graph(n: int) -> Graph:
    _check_n(n, 0)
    return from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    _check_n(n, 0)
    return from_edges(n, [])


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    _check_n(n, 2)
    return from_edges(n, [(0, v) for v in range(1, n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError(f"K_(p,q) needs p, q >= 1, got ({p}, {q})")
    return from_edges(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def cycle_graph(n: int) -> Graph:
    _check_n(n, 3)
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    _check_n(n, 1)
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def double_star_graph(n: int) -> Graph:
    """Tree with degree sequence ``(n/2, n/2, 1, ..., 1)``.

    Centres 0 and 1 are adjacent; each carries ``n/2 - 1`` pendant leaves.
    """
    if n < 4 or n % 2:
        raise ValueError(f"double star needs even n >= 4, got {n}")
    half = n // 2
    edges = [(0, 1)]
    edges += [(0, v) for v in range(2, half + 1)]
    edges += [(1, v) for v in range(half + 1, n)]
    return from_edges(n, edges)


FAMILIES = {
    "complete": complete_graph,
    "empty": empty_graph,
    "star": star_graph,
    "complete_bipartite": complete_bipartite_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "double_star": double_star_graph,
}


def generate(family: str, *params: int) -> Graph:
    """Build a member of a named family, e.g. ``generate("complete_bipartite", 2, 3)``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(*params)


def _check_n(n, least):
    if n < least:
        raise ValueError(f"need n >= {least}, got {n}")
