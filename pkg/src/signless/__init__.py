"""Signless Laplacian, Laplacian and adjacency spectra of simple graphs, the
invariants built from them, and numerical checks of inequalities between them."""

from .graph import Graph, from_edges, generate
from .spectra import SpectralSummary, summarize
from .invariants import (
    all_invariants,
    graph_energy,
    incidence_energy,
    kirchhoff_index,
    lel,
    s_alpha,
    sigma_alpha,
)
from .bounds import BoundId, BoundReport, LemmaReport, lemma_suite

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "from_edges",
    "generate",
    "SpectralSummary",
    "summarize",
    "all_invariants",
    "graph_energy",
    "incidence_energy",
    "kirchhoff_index",
    "lel",
    "s_alpha",
    "sigma_alpha",
    "BoundId",
    "BoundReport",
    "LemmaReport",
    "lemma_suite",
]
