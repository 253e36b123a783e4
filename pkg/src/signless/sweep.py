"""Evaluate the full catalog on many graphs and aggregate the outcome."""

from __future__ import annotations

import math
import multiprocessing
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np

from . import bounds as bd
from .bounds import BoundReport, LemmaReport, NotApplicable
from .graph import Graph, is_connected
from .invariants import all_invariants, s_alpha, sigma_alpha
from .spectra import SpectralSummary, summarize

DEFAULT_ALPHAS = (-1.0, -0.5, 0.5, 1.5, 2.0)
DEFAULT_REAL_KS = (0.0, 0.5, 1.0, 2.0)
TOL_ENV = "SIGNLESS_TOL"
MAX_ENUM_N = 7


def default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    return float(raw) if raw else bd.EQUALITY_TOL


@dataclass(frozen=True)
class RunConfig:
    """Evaluation grid and execution settings.

    ``ks=None`` means every admissible integer ``k``. Values 0 and 1 in
    ``alphas`` only feed the plain invariants; bounds skip them.
    """

    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    ks: Optional[tuple[int, ...]] = None
    real_ks: tuple[float, ...] = DEFAULT_REAL_KS
    tol: float = field(default_factory=default_tol)
    jobs: int = 1
    max_n: int = 62

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if any(k < 0 for k in self.real_ks):
            raise ValueError("real k values must be non-negative")

    @property
    def bound_alphas(self) -> tuple[float, ...]:
        return tuple(a for a in self.alphas if a not in (0, 1))


@dataclass
class GraphResult:
    locator: str
    summary: SpectralSummary
    invariants: dict[str, float]
    lemmas: list[LemmaReport]
    bounds: list[BoundReport]

    @property
    def records(self) -> list:
        return [*self.lemmas, *self.bounds]

    @property
    def ok(self) -> bool:
        """True unless a lemma or a non-diagnostic bound failed."""
        return not any(is_fatal(r) for r in self.records)


def is_fatal(r) -> bool:
    """A failed lemma or catalog bound; failed diagnostics are only reported."""
    if isinstance(r, BoundReport):
        return not r.holds and not r.bound.diagnostic
    return not r.holds


def _ks(s: SpectralSummary, config: RunConfig, bipartite: bool) -> list[int]:
    hi = s.n - 2 if bipartite else s.n - 1
    allowed = range(1, hi + 1)
    if config.ks is None:
        return list(allowed)
    return [k for k in config.ks if k in allowed]


def evaluate_bounds(s: SpectralSummary, config: RunConfig = RunConfig()) -> list[BoundReport]:
    """Every catalog bound applicable to ``s`` on the configured grid."""
    tol = config.tol
    out: list[BoundReport] = []

    def add(fn, *args):
        try:
            out.append(fn(*args, tol=tol))
        except NotApplicable:
            pass

    if s.n >= 2:
        add(bd.degree_square_bound, s)
    if s.connected:
        for k in _ks(s, config, s.bipartite):
            add(bd.mk_upper_bound, s, k)
            if not s.bipartite:
                add(bd.mk_degree_bound, s, k)
    big = s.connected and s.n >= 3
    for a in config.bound_alphas:
        if a > 0:
            for k in _ks(s, config, s.bipartite):
                add(bd.power_sum_bound, s, a, k)
        elif s.connected and s.n >= 2:
            add(bd.power_sum_bound, s, a)
        if big:
            for k in config.real_ks:
                add(bd.amgm_bound, s, a, k)
                if not s.bipartite:
                    add(bd.amgm_q1_bound, s, a, k)
            add(bd.amgm_corollary_bound, s, a)
            add(bd.kober_bound, s, a)
            if not s.bipartite:
                add(bd.kober_q1_bound, s, a)
    if big:
        add(bd.ie_amgm_bound, s)
        add(bd.ie_kober_bound, s)
    return out


def _alpha_invariants(s: SpectralSummary, alphas) -> dict[str, float]:
    out = {}
    for a in alphas:
        for name, fn in (("s", s_alpha), ("sigma", sigma_alpha)):
            try:
                out[f"{name}[{a:g}]"] = fn(s, a)
            except ValueError:
                pass
    return out


def evaluate_graph(g: Graph, config: RunConfig = RunConfig(), locator: str = "") -> GraphResult:
    if g.n > config.max_n:
        raise ValueError(f"{locator or 'graph'}: n={g.n} exceeds the limit {config.max_n}")
    s = summarize(g)
    inv = all_invariants(s)
    inv.update(_alpha_invariants(s, config.alphas))
    return GraphResult(locator, s, inv, bd.lemma_suite(g, s), evaluate_bounds(s, config))


def _evaluate_item(args):
    locator, g, config = args
    return evaluate_graph(g, config, locator)


def run(items: Iterable[tuple[str, Graph]], config: RunConfig = RunConfig()) -> Iterator[GraphResult]:
    """Evaluate ``(locator, graph)`` pairs, yielding results in input order."""
    tasks = ((loc, g, config) for loc, g in items)
    if config.jobs == 1:
        yield from map(_evaluate_item, tasks)
        return
    with multiprocessing.Pool(config.jobs) as pool:
        yield from pool.imap(_evaluate_item, tasks, chunksize=32)


def labeled_graphs(n: int, connected_only: bool = False) -> Iterator[tuple[str, Graph]]:
    """All ``2**(n(n-1)/2)`` labelled graphs on ``n`` vertices in bitmask order.

    Bit ``i`` of the mask selects the ``i``-th pair of ``combinations(range(n), 2)``.
    """
    pairs = list(combinations(range(n), 2))
    rows = np.array([u for u, _ in pairs], dtype=int)
    cols = np.array([v for _, v in pairs], dtype=int)
    bits = np.arange(len(pairs))
    for mask in range(1 << len(pairs)):
        chosen = ((mask >> bits) & 1).astype(bool)
        adj = np.zeros((n, n), dtype=np.uint8)
        adj[rows[chosen], cols[chosen]] = 1
        adj[cols[chosen], rows[chosen]] = 1
        g = Graph(adj)
        if connected_only and not is_connected(g):
            continue
        yield f"n{n}:{mask}", g


@dataclass
class BoundStats:
    evaluations: int = 0
    failures: int = 0
    equalities: int = 0
    min_slack: float = math.inf
    min_slack_at: str = ""


@dataclass
class LemmaStats:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    equalities: int = 0


def _fmt(x) -> str:
    if x is None:
        return "-"
    return f"{x:.12g}"


@dataclass
class SweepSummary:
    """Running aggregate over many :class:`GraphResult` objects."""

    graphs: int = 0
    bounds: dict[str, BoundStats] = field(default_factory=dict)
    lemmas: dict[str, LemmaStats] = field(default_factory=dict)
    failures: list[tuple[str, str, Optional[float], Optional[float], float]] = field(default_factory=list)
    equality_hits: list[tuple[str, str, Optional[float], Optional[float]]] = field(default_factory=list)
    max_listed: int = 50

    def add(self, result: GraphResult):
        self.graphs += 1
        for r in result.bounds:
            tag = r.bound.tag
            st = self.bounds.setdefault(tag, BoundStats())
            st.evaluations += 1
            if r.slack < st.min_slack:
                st.min_slack = r.slack
                st.min_slack_at = _where(result.locator, r.alpha, r.k)
            if not r.holds:
                st.failures += 1
                if len(self.failures) < self.max_listed:
                    self.failures.append((result.locator, tag, r.alpha, r.k, r.slack))
            if r.equality:
                st.equalities += 1
                self.equality_hits.append((result.locator, tag, r.alpha, r.k))
        for lem in result.lemmas:
            st = self.lemmas.setdefault(lem.lemma, LemmaStats())
            if lem.status == "pass":
                st.passed += 1
            elif lem.status == "fail":
                st.failed += 1
                if len(self.failures) < self.max_listed:
                    self.failures.append((result.locator, lem.lemma, None, None, math.nan))
            else:
                st.skipped += 1
            if lem.equality and lem.status != "n/a":
                st.equalities += 1

    @property
    def failure_count(self) -> int:
        return (sum(st.failures for st in self.bounds.values())
                + sum(st.failed for st in self.lemmas.values()))

    @property
    def fatal_count(self) -> int:
        """Failures excluding diagnostic bounds."""
        diag = {b.tag for b in bd.BoundId if b.diagnostic}
        return self.failure_count - sum(st.failures for tag, st in self.bounds.items() if tag in diag)

    def render(self, max_hits: int = 200) -> str:
        lines = [f"graphs evaluated: {self.graphs}", "",
                 "bound  evaluations  failures  equalities  min_slack  at"]
        for tag in sorted(self.bounds, key=_bound_order):
            st = self.bounds[tag]
            lines.append(f"{tag:<6} {st.evaluations:>11} {st.failures:>9} {st.equalities:>11}  "
                         f"{_fmt(st.min_slack)}  {st.min_slack_at}")
        lines += ["", "lemma              pass  fail  n/a  equalities"]
        for name in bd.LEMMAS:
            if name in self.lemmas:
                st = self.lemmas[name]
                lines.append(f"{name:<18} {st.passed:>5} {st.failed:>5} {st.skipped:>4} {st.equalities:>11}")
        lines += ["", f"failures: {self.failure_count} (excluding diagnostics: {self.fatal_count})"]
        for loc, tag, a, k, slack in self.failures:
            lines.append(f"  {loc} {tag} alpha={_fmt(a)} k={_fmt(k)} slack={_fmt(slack)}")
        lines += ["", f"equality hits: {len(self.equality_hits)}"]
        for loc, tag, a, k in self.equality_hits[:max_hits]:
            lines.append(f"  {loc} {tag} alpha={_fmt(a)} k={_fmt(k)}")
        if len(self.equality_hits) > max_hits:
            lines.append(f"  ... {len(self.equality_hits) - max_hits} more")
        return "\n".join(lines) + "\n"


def _where(locator, a, k):
    return f"{locator} alpha={_fmt(a)} k={_fmt(k)}"


def _bound_order(tag: str) -> int:
    return int(tag[2:]) if tag.startswith("EQ") and tag[2:].isdigit() else 10**6
