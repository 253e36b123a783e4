"""Spectral invariants: power sums, incidence energy, LEL, energy, Kirchhoff index."""

from __future__ import annotations

import numpy as np

from .spectra import SpectralSummary


def _power_sum(values: np.ndarray, a: float) -> float:
    if a == 0:
        return float(values.size)
    if a == 1:
        return float(np.sum(values))
    if a < 0 and np.any(values == 0):
        raise ValueError(f"negative power {a} of a zero eigenvalue")
    return float(np.sum(values ** a))


def excludes_zero(s: SpectralSummary, a: float) -> bool:
    """Whether :func:`s_alpha` drops the zero eigenvalue ``q_n`` for this input.

    For ``a < 0`` on a connected bipartite graph, ``q_n = 0`` is left out so that
    ``s_alpha`` agrees with ``sigma_alpha`` there.
    """
    return a < 0 and s.bipartite and s.connected and s.n >= 2


def s_alpha(s: SpectralSummary, a: float) -> float:
    """Sum of ``q_i ** a`` over the signless Laplacian spectrum.

    ``s_0 = n`` and ``s_1 = 2m`` exactly. See :func:`excludes_zero` for the
    bipartite convention when ``a < 0``; any other zero eigenvalue under a
    negative exponent raises ``ValueError``.
    """
    q = s.signless_spectrum
    if a == 1:
        return float(2 * s.m)
    if excludes_zero(s, a):
        q = q[:-1]
    return _power_sum(q, a)


def sigma_alpha(s: SpectralSummary, a: float) -> float:
    """Sum of ``mu_i ** a`` over the ``n - 1`` largest Laplacian eigenvalues."""
    if a == 1:
        return float(2 * s.m)
    return _power_sum(s.laplacian_spectrum[:-1], a)


def incidence_energy(s: SpectralSummary) -> float:
    return float(np.sum(np.sqrt(s.signless_spectrum)))


def lel(s: SpectralSummary) -> float:
    """Laplacian-energy-like invariant ``sum sqrt(mu_i)``."""
    return float(np.sum(np.sqrt(s.laplacian_spectrum[:-1])))


def graph_energy(s: SpectralSummary) -> float:
    return float(np.sum(np.abs(s.adjacency_spectrum)))


def kirchhoff_index(s: SpectralSummary) -> float:
    """``n * sigma_{-1}``; the graph must be connected."""
    if not s.connected or s.n < 1:
        raise ValueError("Kirchhoff index needs a connected graph")
    if s.n == 1:
        return 0.0
    return s.n * sigma_alpha(s, -1)


def all_invariants(s: SpectralSummary) -> dict[str, float]:
    """The invariants that are defined for ``s``, keyed by short name."""
    out = {
        "n": float(s.n),
        "m": float(s.m),
        "energy": graph_energy(s),
        "ie": incidence_energy(s),
        "lel": lel(s),
        "spanning_trees": s.spanning_trees,
    }
    if s.connected and s.n >= 1:
        out["kirchhoff"] = kirchhoff_index(s)
    if s.t1 is not None:
        out["t1"] = s.t1
    if s.big_t is not None:
        out["T"] = s.big_t
    return out
