"""Graph matrices, their spectra, and the spanning-tree quantities built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph, double_cover, is_bipartite, is_connected
from .linalg import DEFAULT_TOL, clamp_zero, determinant, eigenvalues_sym, principal_minor

COUNT_RTOL = 1e-6
DISTINCT_RTOL = 1e-6


def build_matrices(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(A, L, Q)`` with ``L = D - A`` and ``Q = D + A``."""
    a = g.adjacency.astype(float)
    d = np.diag(np.asarray(g.degrees, dtype=float))
    return a, d - a, d + a


def _round_count(value: float) -> tuple[float, bool]:
    nearest = round(value)
    if abs(value - nearest) <= COUNT_RTOL * max(1.0, abs(value)):
        return float(nearest), True
    return value, False


def _tree_count(g: Graph) -> tuple[float, bool]:
    if g.n <= 1:
        return 1.0, True
    _, lap, _ = build_matrices(g)
    return _round_count(determinant(principal_minor(lap, 0)))


def spanning_tree_count(g: Graph) -> float:
    """Number of spanning trees via the Matrix-Tree theorem.

    The cofactor is rounded to the nearest integer when it lies within a
    relative ``1e-6`` of one; otherwise the raw determinant is returned.
    """
    return _tree_count(g)[0]


def t1(g: Graph) -> float:
    """``2 t(G x K2) / t(G)`` for a connected non-bipartite graph."""
    if not is_connected(g):
        raise ValueError("t1 needs a connected graph")
    if is_bipartite(g):
        raise ValueError("t1 is only used for non-bipartite graphs")
    return 2.0 * spanning_tree_count(double_cover(g)) / spanning_tree_count(g)


def big_t(g: Graph) -> float:
    """The degree-based lower estimate ``T`` of the largest signless eigenvalue."""
    if g.n < 1:
        raise ValueError("T needs at least one vertex")
    hi, lo = g.max_degree, g.min_degree
    return 0.5 * (hi + lo + math.sqrt((hi - lo) ** 2 + 4 * hi))


def distinct_count(values, rtol: float = DISTINCT_RTOL) -> int:
    """Number of distinct values; neighbours closer than ``rtol*max(1, max|v|)`` merge."""
    vals = np.sort(np.asarray(values, dtype=float))
    if vals.size == 0:
        return 0
    gap = rtol * max(1.0, float(np.max(np.abs(vals))))
    return 1 + int(np.sum(np.diff(vals) >= gap))


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    """Spectra and spanning-tree data of one graph.

    All spectra are sorted non-increasing. Laplacian and signless Laplacian
    eigenvalues within ``1e-8`` of zero are clamped to zero. ``t1`` is set only
    for connected non-bipartite graphs and ``big_t`` only when ``n >= 1``.
    ``spanning_trees_integral`` is False when a Matrix-Tree cofactor (of the
    graph or, when ``t1`` is set, of its double cover) did not round cleanly.
    """

    graph: Graph
    adjacency_spectrum: np.ndarray
    laplacian_spectrum: np.ndarray
    signless_spectrum: np.ndarray
    spanning_trees: float
    spanning_trees_integral: bool
    t1: Optional[float]
    big_t: Optional[float]
    connected: bool
    bipartite: bool
    double_cover_trees: Optional[float] = field(default=None)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def partial_sum(self, k: int) -> float:
        return partial_sum(self, k)


def summarize(g: Graph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    a, lap, q = build_matrices(g)
    adj_spec = eigenvalues_sym(a, tol)
    lap_spec = np.maximum(clamp_zero(eigenvalues_sym(lap, tol)), 0.0)
    q_spec = np.maximum(clamp_zero(eigenvalues_sym(q, tol)), 0.0)
    if g.n:
        lap_spec[-1] = 0.0
    connected = is_connected(g)
    bipartite = is_bipartite(g)
    trees, integral = _tree_count(g)
    cover_trees = None
    t1_value = None
    if connected and not bipartite:
        cover_trees, cover_integral = _tree_count(double_cover(g))
        integral = integral and cover_integral
        t1_value = 2.0 * cover_trees / trees
    return SpectralSummary(
        graph=g,
        adjacency_spectrum=_frozen(adj_spec),
        laplacian_spectrum=_frozen(lap_spec),
        signless_spectrum=_frozen(q_spec),
        spanning_trees=trees,
        spanning_trees_integral=integral,
        t1=t1_value,
        big_t=big_t(g) if g.n else None,
        connected=connected,
        bipartite=bipartite,
        double_cover_trees=cover_trees,
    )


def partial_sum(s: SpectralSummary, k: int) -> float:
    """``M_k``: sum of the ``k`` largest signless Laplacian eigenvalues, ``1 <= k <= n-1``."""
    if not 1 <= k <= s.n - 1:
        raise ValueError(f"k={k} outside 1..{s.n - 1}")
    return float(np.sum(s.signless_spectrum[:k]))
