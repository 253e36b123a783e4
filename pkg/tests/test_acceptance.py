"""Acceptance criteria, each run at its stated tolerance.

Every test records its outcome through the ``criterion`` fixture; the terminal
summary prints one PASS/FAIL line per criterion.
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np
import pytest

from signless import bounds as bd
from signless import graph as gr
from signless.cli import main
from signless.graphio import parse_graph6, write_graph6
from signless.invariants import s_alpha
from signless.spectra import spanning_tree_count, summarize
from signless.sweep import labeled_graphs, run

from oracles import connected_labeled_count, deletion_contraction_trees

TOL = 1e-9
PRODUCT_RTOL = 1e-8
SOUND_TAGS = ["EQ2", "EQ4", "EQ5", "EQ7", "EQ8", "EQ9", "EQ10", "EQ11", "EQ12", "EQ16", "EQ17",
              "EQ19", "EQ20", "EQ21", "EQ22", "EQ23", "EQ24", "EQ27", "EQ28"]
STRICT_TAGS = ["EQ16", "EQ17", "EQ19", "EQ20", "EQ21", "EQ22", "EQ24", "EQ26", "EQ28"]


@dataclass
class TagStats:
    evaluations: int = 0
    failures: int = 0
    not_strict: int = 0
    min_slack: float = math.inf
    first_failure: str = ""
    first_not_strict: str = ""


@dataclass
class Sweep:
    graphs: dict = field(default_factory=dict)
    tags: dict = field(default_factory=dict)
    lemma_failures: list = field(default_factory=list)
    lemma_counts: dict = field(default_factory=dict)
    q1_equality_mismatch: list = field(default_factory=list)
    degree_equality_mismatch: list = field(default_factory=list)
    product_mu_worst: float = 0.0
    product_q_worst: float = 0.0
    product_checked: int = 0
    seconds: float = 0.0


def _scale(x):
    return TOL * max(1.0, abs(x))


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _is_star(g):
    degs = sorted(g.degrees)
    return g.n >= 2 and degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def _is_complete(g):
    return all(d == g.n - 1 for d in g.degrees)


@pytest.fixture(scope="module")
def sweep():
    out = Sweep()
    start = time.perf_counter()
    items = ((loc, g) for n in range(3, 7) for loc, g in labeled_graphs(n, connected_only=True))
    for res in run(items):
        s, g, loc = res.summary, res.summary.graph, res.locator
        out.graphs[g.n] = out.graphs.get(g.n, 0) + 1
        for r in res.bounds:
            st = out.tags.setdefault(r.bound.tag, TagStats())
            st.evaluations += 1
            where = f"{loc} alpha={r.alpha} k={r.k} lhs={r.lhs:.12g} rhs={r.rhs:.12g}"
            if r.slack < st.min_slack:
                st.min_slack = r.slack
            if r.slack < -_scale(r.lhs):
                st.failures += 1
                st.first_failure = st.first_failure or where
            if not r.slack > _scale(r.lhs):
                st.not_strict += 1
                st.first_not_strict = st.first_not_strict or where
        for lem in res.lemmas:
            out.lemma_counts[(lem.lemma, lem.status)] = out.lemma_counts.get((lem.lemma, lem.status), 0) + 1
            if lem.status == "fail":
                out.lemma_failures.append((loc, lem.lemma))
            if lem.lemma == "q1_lower" and lem.equality != _is_star(g):
                out.q1_equality_mismatch.append(loc)
            if lem.lemma == "degree_squares" and lem.equality != (_is_star(g) or _is_complete(g)):
                out.degree_equality_mismatch.append(loc)
        # eigenvalue products against the tree counts
        mu_prod = float(np.prod(s.laplacian_spectrum[:-1]))
        out.product_mu_worst = max(out.product_mu_worst, _rel(mu_prod, g.n * s.spanning_trees))
        if not s.bipartite:
            out.product_q_worst = max(out.product_q_worst, _rel(float(np.prod(s.signless_spectrum)), s.t1))
        out.product_checked += 1
    out.seconds = time.perf_counter() - start
    return out


# 1. soundness ---------------------------------------------------------------------

def test_sweep_covers_every_connected_graph(sweep, criterion):
    expected = {n: connected_labeled_count(n) for n in range(3, 7)}
    ok = sweep.graphs == expected
    criterion(1, "graph counts", ok, f"{sweep.graphs} vs {expected}; {sweep.seconds:.0f}s on one worker")
    assert ok


@pytest.mark.parametrize("tag", SOUND_TAGS)
def test_soundness(sweep, criterion, tag):
    st = sweep.tags.get(tag, TagStats())
    ok = st.evaluations > 0 and st.failures == 0
    criterion(1, tag, ok, f"{st.failures}/{st.evaluations} violations, min slack {st.min_slack:.3g}, "
                          f"first at {st.first_failure}")
    assert st.evaluations > 0
    assert st.failures == 0, st.first_failure


# 2. strictness -------------------------------------------------------------------

@pytest.mark.parametrize("tag", STRICT_TAGS)
def test_strictness(sweep, criterion, tag):
    st = sweep.tags.get(tag, TagStats())
    ok = st.evaluations > 0 and st.not_strict == 0
    criterion(2, tag, ok, f"{st.not_strict}/{st.evaluations} with slack <= tol, min slack "
                          f"{st.min_slack:.3g}, first at {st.first_not_strict}")
    assert st.evaluations > 0
    assert st.not_strict == 0, st.first_not_strict


# 3. equality reproduction --------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 9))
def test_equality_families(criterion, n):
    star = summarize(gr.star_graph(n))
    r4 = bd.mk_upper_bound(star, 1)
    ok4 = r4.bound is bd.BoundId.EQ4 and abs(r4.slack) <= _scale(r4.lhs)
    kn = summarize(gr.complete_graph(n))
    r5 = bd.mk_upper_bound(kn, 1)
    ok5 = r5.bound is bd.BoundId.EQ5 and abs(r5.slack) <= _scale(r5.lhs)
    ok12 = True
    for a in (-1.0, -0.5):
        r12 = bd.power_sum_bound(kn, a)
        ok12 = ok12 and r12.bound is bd.BoundId.EQ12 and r12.k == 1 and abs(r12.slack) <= _scale(r12.lhs)
    criterion(3, f"EQ4 star n={n}", ok4, f"slack {r4.slack:.3g}")
    criterion(3, f"EQ5 complete n={n}", ok5, f"slack {r5.slack:.3g}")
    criterion(3, f"EQ12 complete n={n}", ok12)
    assert ok4 and ok5 and ok12


@pytest.mark.parametrize("n", range(3, 9))
def test_complete_graph_closed_form(criterion, n):
    s = summarize(gr.complete_graph(n))
    worst = 0.0
    for a in (-1.0, 0.5, 2.0):
        closed = (2 * (n - 1)) ** a + (n - 1) * (n - 2) ** a
        worst = max(worst, abs(s_alpha(s, a) - closed) / max(1.0, abs(closed)))
    ok = worst <= TOL
    criterion(3, f"closed form n={n}", ok, f"error {worst:.3g}")
    assert ok


# 4. eigenvalue products ---------------------------------------------------------

def test_product_identities_on_sweep(sweep, criterion):
    ok = sweep.product_mu_worst <= PRODUCT_RTOL and sweep.product_q_worst <= PRODUCT_RTOL
    criterion(4, "connected n=3..6", ok, f"worst relative errors {sweep.product_mu_worst:.3g}, "
                                          f"{sweep.product_q_worst:.3g}")
    assert ok


@pytest.mark.parametrize("g, name", [(gr.cycle_graph(5), "C5"), (gr.cycle_graph(7), "C7"),
                                     (gr.complete_graph(5), "K5"), (gr.complete_graph(1), "K1"),
                                     (gr.complete_graph(2), "K2")])
def test_product_identities_spot(criterion, g, name):
    s = summarize(g)
    ok = _rel(float(np.prod(s.laplacian_spectrum[:-1])), g.n * s.spanning_trees) <= PRODUCT_RTOL
    if s.t1 is not None:
        ok = ok and _rel(float(np.prod(s.signless_spectrum)), s.t1) <= PRODUCT_RTOL
        cover = deletion_contraction_trees(2 * g.n, gr.double_cover(g).edges())
        ok = ok and _rel(s.t1, 2 * cover / deletion_contraction_trees(g.n, g.edges())) <= PRODUCT_RTOL
    criterion(4, name, ok)
    assert ok


# 5. lemma suite -----------------------------------------------------------------

def test_lemmas_pass(sweep, criterion):
    ok = not sweep.lemma_failures
    criterion(5, "all lemmas pass", ok, f"{len(sweep.lemma_failures)} failures, first "
                                        f"{sweep.lemma_failures[:1]}")
    assert ok


def test_lemma_equality_cases(sweep, criterion):
    ok_q1 = not sweep.q1_equality_mismatch
    ok_deg = not sweep.degree_equality_mismatch
    criterion(5, "largest eigenvalue estimate equality exactly on stars", ok_q1,
              f"mismatches {sweep.q1_equality_mismatch[:3]}")
    criterion(5, "degree-square equality exactly on stars and complete graphs", ok_deg,
              f"mismatches {sweep.degree_equality_mismatch[:3]}")
    assert ok_q1 and ok_deg


# 6. Matrix-Tree vs deletion-contraction -----------------------------------------

def test_tree_counts_against_deletion_contraction(criterion):
    checked = mismatched = 0
    first = ""
    for n in range(1, 7):
        for loc, g in labeled_graphs(n, connected_only=True):
            if g.m > 10:
                continue
            checked += 1
            if spanning_tree_count(g) != deletion_contraction_trees(n, g.edges()):
                mismatched += 1
                first = first or loc
    ok = checked > 0 and mismatched == 0
    criterion(6, "connected n<=6, m<=10", ok, f"{mismatched}/{checked} mismatches, first {first}")
    assert ok


# 7. scalar lemmas ---------------------------------------------------------------

CASES = 10_000
SCALAR_TOL = 1e-10


def test_weighted_amgm_gap_randomized(criterion):
    rng = np.random.default_rng(2024)
    below = iff_broken = 0
    example = None
    for i in range(CASES):
        n = int(rng.integers(2, 9))
        values = np.full(n, rng.uniform(0.1, 10)) if i % 4 == 0 else rng.uniform(0.1, 10, n)
        # half the cases use uniform weights, the regime listed among the worked examples
        weights = np.full(n, 1.0 / n) if i % 2 else rng.dirichlet(np.ones(n))
        weights = weights / weights.sum()
        lhs, rhs = bd.weighted_amgm_gap(values, weights)
        if lhs < rhs - SCALAR_TOL:
            below += 1
        equal_sides = abs(lhs - rhs) <= SCALAR_TOL
        all_equal = np.ptp(values) <= SCALAR_TOL
        if equal_sides != all_equal:
            iff_broken += 1
            example = example or (np.round(values, 3).tolist(), np.round(weights, 3).tolist())
    criterion(7, "weighted gap inequality", below == 0, f"{below}/{CASES} below")
    criterion(7, "equality iff all values equal", iff_broken == 0,
              f"{iff_broken}/{CASES} cases with equal sides but unequal values, e.g. {example}")
    assert below == 0
    assert iff_broken == 0


def test_kober_chain_randomized(criterion):
    rng = np.random.default_rng(7)
    chain_bad = bound_bad = 0
    for _ in range(CASES):
        n = int(rng.integers(2, 10))
        values = rng.uniform(0.01, 10, n)
        deltas = [v for _, v in bd.kober_chain(values)]
        if any(a < b - SCALAR_TOL for a, b in zip(deltas, deltas[1:])):
            chain_bad += 1
        big, small = bd.kober_mean_bound(values)
        if big < small - SCALAR_TOL:
            bound_bad += 1
    criterion(7, "Kober chain monotone", chain_bad == 0, f"{chain_bad}/{CASES}")
    criterion(7, "mean bound with the square-root correction", bound_bad == 0, f"{bound_bad}/{CASES}")
    assert chain_bad == 0 and bound_bad == 0


# 8. graph6 -----------------------------------------------------------------------

def test_graph6_round_trip(criterion):
    rng = np.random.default_rng(8)
    bad = 0
    for _ in range(CASES):
        n = int(rng.integers(0, 9))
        upper = np.triu(rng.random((n, n)) < rng.random(), 1)
        g = gr.Graph((upper | upper.T).astype(np.uint8))
        if parse_graph6(write_graph6(g)) != g:
            bad += 1
    criterion(8, "round trip", bad == 0, f"{bad}/{CASES}")
    assert bad == 0


def test_graph6_fixed_vectors(criterion):
    ok = (parse_graph6("A_") == gr.complete_graph(2) and parse_graph6("Bw") == gr.complete_graph(3)
          and parse_graph6("Bg") == gr.path_graph(3) and write_graph6(gr.path_graph(3)) == "Bg")
    criterion(8, "fixed vectors", ok)
    assert ok


# 9. determinism --------------------------------------------------------------------

def test_enumerate_identical_across_workers(tmp_path, capsysbinary, criterion):
    outputs = []
    for jobs in (1, 2):
        report = tmp_path / f"report{jobs}.csv"
        main(["enumerate", "--n", "5", "--jobs", str(jobs), "--report", str(report)])
        outputs.append((capsysbinary.readouterr().out, report.read_bytes()))
    ok = outputs[0] == outputs[1] and len(outputs[0][1]) > 0
    criterion(9, "enumerate --n 5 with 1 and 2 workers", ok)
    assert ok
