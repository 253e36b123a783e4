"""Inequality catalog for power sums of signless Laplacian eigenvalues.

Every evaluator returns a :class:`BoundReport` whose ``slack`` is oriented so
that ``slack >= 0`` means the inequality holds. Evaluators raise
:class:`NotApplicable` when the input falls outside the hypotheses of the
inequality (wrong bipartiteness branch, disconnected graph, ``k`` out of range,
``alpha`` in {0, 1}).

Two families share a general form over ``p`` positive eigenvalues whose
product is ``P``: bipartite graphs use the ``n - 1`` non-zero Laplacian
eigenvalues with ``P = n t``; non-bipartite graphs use all ``n`` signless
eigenvalues with ``P = t1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from . import graph as gr
from .invariants import excludes_zero, s_alpha
from .spectra import SpectralSummary, distinct_count, summarize

EQUALITY_TOL = 1e-9
PRODUCT_RTOL = 1e-8


class NotApplicable(ValueError):
    """The graph or parameters violate the hypotheses of an inequality."""


class BoundId(Enum):
    """Catalog entry: direction, strictness, whether it is a diagnostic, and scope."""

    EQ2 = ("EQ2", "upper", False, False, "any graph, n >= 2")
    EQ4 = ("EQ4", "upper", False, False, "connected bipartite, 1 <= k <= n-2")
    EQ5 = ("EQ5", "upper", False, False, "connected non-bipartite, 1 <= k <= n-1")
    EQ6 = ("EQ6", "upper", False, True, "connected non-bipartite, 1 <= k <= n-1")
    EQ7 = ("EQ7", "upper", False, False, "bipartite, n >= 3, 0 < alpha < 1, 1 <= k <= n-2")
    EQ8 = ("EQ8", "lower", False, False, "bipartite, n >= 3, alpha > 1, 1 <= k <= n-2")
    EQ9 = ("EQ9", "upper", False, False, "connected bipartite, n >= 3, alpha < 0, min over k")
    EQ10 = ("EQ10", "upper", False, False, "non-bipartite, 0 < alpha < 1, 1 <= k <= n-1")
    EQ11 = ("EQ11", "lower", False, False, "non-bipartite, alpha > 1, 1 <= k <= n-1")
    EQ12 = ("EQ12", "upper", False, False, "connected non-bipartite, alpha < 0, min over k")
    EQ16 = ("EQ16", "lower", True, False, "connected bipartite, n >= 3, alpha not in {0,1}, real k >= 0")
    EQ17 = ("EQ17", "lower", True, False, "connected non-bipartite, n >= 3, alpha not in {0,1}, real k >= 0")
    EQ18 = ("EQ18", "lower", False, True, "connected non-bipartite, n >= 3, alpha not in {0,1}, real k >= 0")
    EQ19 = ("EQ19", "lower", True, False, "connected bipartite, n >= 3, alpha not in {0,1}, k = 1")
    EQ20 = ("EQ20", "lower", True, False, "connected non-bipartite, n >= 3, alpha not in {0,1}, k = 1")
    EQ21 = ("EQ21", "lower", True, False, "connected bipartite, n >= 3, alpha = 1/2, k = 1")
    EQ22 = ("EQ22", "lower", True, False, "connected non-bipartite, n >= 3, alpha = 1/2, k = 1")
    EQ23 = ("EQ23", "lower", False, False, "connected bipartite, n >= 3, alpha not in {0,1}")
    EQ24 = ("EQ24", "lower", True, False, "connected non-bipartite, n >= 3, alpha not in {0,1}")
    EQ26 = ("EQ26", "lower", True, True, "connected non-bipartite, n >= 3, alpha not in {0,1}")
    EQ27 = ("EQ27", "lower", False, False, "connected bipartite, n >= 3, alpha = 1/2")
    EQ28 = ("EQ28", "lower", True, False, "connected non-bipartite, n >= 3, alpha = 1/2")

    def __init__(self, tag, direction, strict, diagnostic, applicability):
        self.tag = tag
        self.direction = direction
        self.strict = strict
        self.diagnostic = diagnostic
        self.applicability = applicability

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class BoundReport:
    bound: BoundId
    alpha: Optional[float]
    k: Optional[float]
    lhs: float
    rhs: float
    slack: float
    holds: bool
    equality: bool
    not_applicable_reason: str = ""
    note: str = ""


def make_report(bound: BoundId, lhs: float, rhs: float, alpha=None, k=None,
                tol: float = EQUALITY_TOL, note: str = "") -> BoundReport:
    slack = rhs - lhs if bound.direction == "upper" else lhs - rhs
    scale = tol * max(1.0, abs(lhs))
    holds = bool(slack >= -scale)
    equality = bool(abs(slack) <= scale)
    return BoundReport(bound, alpha, k, float(lhs), float(rhs), float(slack),
                       holds, equality, note=note)


def not_applicable(bound: BoundId, reason: str, alpha=None, k=None) -> BoundReport:
    nan = math.nan
    return BoundReport(bound, alpha, k, nan, nan, nan, True, False, reason)


def _pow(x: float, a: float) -> float:
    # x may carry a tiny negative rounding error; 0 ** negative is +inf.
    x = max(x, 0.0)
    if x == 0.0:
        return math.inf if a < 0 else 0.0
    return x ** a


def _check_alpha(a: float):
    if a == 0 or a == 1:
        raise NotApplicable("alpha must differ from 0 and 1")


def _require(condition: bool, message: str):
    if not condition:
        raise NotApplicable(message)


def _lhs(s: SpectralSummary, a: float) -> tuple[float, str]:
    note = "zero eigenvalue excluded" if excludes_zero(s, a) else ""
    return s_alpha(s, a), note


# Degree squares ------------------------------------------------------------

def degree_square_bound(s: SpectralSummary, tol: float = EQUALITY_TOL) -> BoundReport:
    """Sum of squared degrees against ``m (2m/(n-1) + n - 2)``."""
    n, m = s.n, s.m
    _require(n >= 2, "needs n >= 2")
    lhs = float(sum(d * d for d in s.graph.degrees))
    rhs = m * (2 * m / (n - 1) + n - 2)
    return make_report(BoundId.EQ2, lhs, rhs, tol=tol)


# Partial sums M_k -----------------------------------------------------------

def _k_range(s: SpectralSummary) -> range:
    return range(1, s.n - 1) if s.bipartite else range(1, s.n)


def admissible_k(s: SpectralSummary) -> list[int]:
    """Integer ``k`` values accepted by the partial-sum and power-sum bounds."""
    return list(_k_range(s))


def _check_k(s: SpectralSummary, k: int, bipartite: bool):
    hi = s.n - 2 if bipartite else s.n - 1
    _require(int(k) == k and 1 <= k <= hi, f"k={k} outside 1..{hi}")


def _mk_rhs_bipartite(n, m, k):
    root = math.sqrt(max(m * k * (n - k - 1) * (n * n - n - 2 * m), 0.0))
    return (2 * m * k + root) / (n - 1), root


def _mk_rhs_general(n, m, k):
    root = math.sqrt(max(m * k * (n - k) * (n * n + 2 * m * n / (n - 1) - 4 * m), 0.0))
    return (2 * m * k + root) / n, root


def mk_upper_bound(s: SpectralSummary, k: int, tol: float = EQUALITY_TOL) -> BoundReport:
    """Upper bound on the sum of the ``k`` largest signless eigenvalues (EQ4 or EQ5)."""
    _require(s.connected, "needs a connected graph")
    _check_k(s, k, s.bipartite)
    n, m = s.n, s.m
    lhs = s.partial_sum(k)
    if s.bipartite:
        rhs, _ = _mk_rhs_bipartite(n, m, k)
        return make_report(BoundId.EQ4, lhs, rhs, k=k, tol=tol)
    rhs, _ = _mk_rhs_general(n, m, k)
    return make_report(BoundId.EQ5, lhs, rhs, k=k, tol=tol)


def mk_degree_bound(s: SpectralSummary, k: int, tol: float = EQUALITY_TOL) -> BoundReport:
    """EQ6: the EQ5 bound before the degree-square estimate is applied."""
    _require(s.connected and not s.bipartite, "needs a connected non-bipartite graph")
    _check_k(s, k, False)
    n, m = s.n, s.m
    sq = sum(d * d for d in s.graph.degrees)
    rhs = (2 * m * k + math.sqrt(max(k * (n - k) * (n * (2 * m + sq) - 4 * m * m), 0.0))) / n
    return make_report(BoundId.EQ6, s.partial_sum(k), rhs, k=k, tol=tol)


# Power sums via partial sums ---------------------------------------------------

def _power_split(k, rest, x, y, a):
    return _pow(k, 1 - a) * _pow(x, a) + _pow(rest, 1 - a) * _pow(y, a)


def power_sum_rhs(n: int, m: int, a: float, k: int, bipartite: bool) -> float:
    """Right-hand side of the partial-sum based power-sum bound at a single ``k``.

    For ``a > 0`` this is the split at the average ``2mk/p`` (``p = n - 1`` for the
    bipartite form, ``p = n`` otherwise); for ``a < 0`` the split is at the
    upper estimate of ``M_k``.
    """
    p = n - 1 if bipartite else n
    rest = p - k
    if a > 0:
        x = 2 * m * k / p
        return _power_split(k, rest, x, 2 * m - x, a)
    if bipartite:
        x, root = _mk_rhs_bipartite(n, m, k)
    else:
        x, root = _mk_rhs_general(n, m, k)
    y = (2 * m * rest - root) / p
    return _power_split(k, rest, x, y, a)


def power_sum_bound(s: SpectralSummary, a: float, k: Optional[int] = None,
                    formula: Optional[str] = None, tol: float = EQUALITY_TOL) -> BoundReport:
    """Power-sum bound obtained from splitting the spectrum after ``k`` terms.

    ``0 < a < 1`` gives an upper bound (EQ7 bipartite, EQ10 otherwise), ``a > 1``
    a lower bound (EQ8 / EQ11), and ``a < 0`` an upper bound minimised over all
    admissible ``k`` (EQ9 / EQ12) unless ``k`` is given. ``formula`` forces
    ``"bipartite"`` or ``"nonbipartite"``; by default the graph decides. The
    non-bipartite formula is valid for every graph, which is how the empty
    graph equality case is reached.
    """
    _check_alpha(a)
    if formula is None:
        bipartite = s.bipartite
    elif formula in ("bipartite", "nonbipartite"):
        bipartite = formula == "bipartite"
        _require(s.bipartite or not bipartite, "bipartite formula on a non-bipartite graph")
    else:
        raise ValueError(f"unknown formula {formula!r}")
    n, m = s.n, s.m
    _require(n >= 2, "needs n >= 2")
    if a > 0:
        _require(k is not None, "k is required for alpha > 0")
        _check_k(s, k, bipartite)
        lhs, note = _lhs(s, a)
        rhs = power_sum_rhs(n, m, a, k, bipartite)
        if bipartite:
            bound = BoundId.EQ7 if a < 1 else BoundId.EQ8
        else:
            bound = BoundId.EQ10 if a < 1 else BoundId.EQ11
        return make_report(bound, lhs, rhs, alpha=a, k=k, tol=tol, note=note)

    _require(s.connected, "alpha < 0 needs a connected graph")
    _require(bipartite == s.bipartite, "alpha < 0 needs the graph's own branch")
    bound = BoundId.EQ9 if bipartite else BoundId.EQ12
    lhs, note = _lhs(s, a)
    if k is not None:
        _check_k(s, k, bipartite)
        candidates = [k]
    else:
        candidates = list(range(1, (n - 2 if bipartite else n - 1) + 1))
        _require(bool(candidates), "no admissible k")
    values = [(power_sum_rhs(n, m, a, j, bipartite), j) for j in candidates]
    rhs, best_k = min(values)
    return make_report(bound, lhs, rhs, alpha=a, k=best_k, tol=tol, note=note)


def power_mean_steps(s: SpectralSummary, a: float, k: int) -> list[tuple[str, float, float]]:
    """Intermediate inequalities behind the partial-sum power bounds.

    Returns ``(name, smaller, larger)`` triples that should satisfy
    ``smaller <= larger`` for ``0 < a < 1`` and ``1 <= k <= n-1``.
    """
    if not 0 < a < 1:
        raise ValueError("the power-mean steps are stated for 0 < alpha < 1")
    q = s.signless_spectrum
    n, m = s.n, s.m
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    head = float(np.sum(q[:k]))
    return [
        ("head", float(np.sum(q[:k] ** a)), k ** (1 - a) * head ** a),
        ("tail", float(np.sum(q[k:] ** a)), (n - k) ** (1 - a) * max(2 * m - head, 0.0) ** a),
        ("average", 2 * m * k / n, head),
    ]


# Spanning-tree based bounds ---------------------------------------------------

def _product_branch(s: SpectralSummary) -> tuple[int, float]:
    """``(p, P)``: number of positive eigenvalues used and their product."""
    _require(s.connected, "needs a connected graph")
    _require(s.n >= 3, "needs n >= 3")
    if s.bipartite:
        return s.n - 1, s.n * s.spanning_trees
    return s.n, s.t1


def amgm_rhs(p: int, product: float, x: float, a: float, k: float) -> float:
    """Weighted AM-GM lower bound on a power sum over ``p`` values.

    ``x`` stands in for the largest value: the degree estimate ``T`` gives the
    catalog bound, the actual ``q_1`` the sharper diagnostic form.
    """
    kp = k + 1
    bracket = kp * product ** (a / (kp * p * (p - 1))) / x ** (a / (kp * (p - 1))) - k
    return (p - 1) * product ** (a / p) * bracket + x ** a


def amgm_bound(s: SpectralSummary, a: float, k: float, tol: float = EQUALITY_TOL,
               bound: Optional[BoundId] = None) -> BoundReport:
    """Strict lower bound from weighted AM-GM (EQ16 bipartite, EQ17 otherwise)."""
    _check_alpha(a)
    _require(k >= 0, "k must be non-negative")
    p, product = _product_branch(s)
    if bound is None:
        bound = BoundId.EQ16 if s.bipartite else BoundId.EQ17
    lhs, note = _lhs(s, a)
    rhs = amgm_rhs(p, product, s.big_t, a, k)
    return make_report(bound, lhs, rhs, alpha=a, k=k, tol=tol, note=note)


def amgm_q1_bound(s: SpectralSummary, a: float, k: float, tol: float = EQUALITY_TOL) -> BoundReport:
    """EQ18: the EQ17 bound with ``q_1`` in place of ``T``."""
    _check_alpha(a)
    _require(k >= 0, "k must be non-negative")
    _require(not s.bipartite, "needs a non-bipartite graph")
    p, product = _product_branch(s)
    rhs = amgm_rhs(p, product, float(s.signless_spectrum[0]), a, k)
    return make_report(BoundId.EQ18, s_alpha(s, a), rhs, alpha=a, k=k, tol=tol)


def amgm_corollary_bound(s: SpectralSummary, a: float, tol: float = EQUALITY_TOL) -> BoundReport:
    """The weighted AM-GM bound at ``k = 1`` (EQ19 / EQ20)."""
    _require(s.connected, "needs a connected graph")
    bound = BoundId.EQ19 if s.bipartite else BoundId.EQ20
    return amgm_bound(s, a, 1, tol=tol, bound=bound)


def ie_amgm_bound(s: SpectralSummary, tol: float = EQUALITY_TOL) -> BoundReport:
    """Incidence energy lower bound: the AM-GM bound at ``alpha = 1/2``, ``k = 1``."""
    _require(s.connected, "needs a connected graph")
    bound = BoundId.EQ21 if s.bipartite else BoundId.EQ22
    return amgm_bound(s, 0.5, 1, tol=tol, bound=bound)


def kober_rhs(p: int, product: float, x: float, a: float, second: float, smallest: float) -> float:
    """Kober-type lower bound over ``p`` values with a degree correction term."""
    correction = (_pow(second, a / 2) - _pow(smallest, a / 2)) ** 2
    return x ** a + (p - 1) * (product / x) ** (a / (p - 1)) + correction


def _kober_degrees(s: SpectralSummary) -> tuple[float, float]:
    g = s.graph
    second = g.second_max_degree if s.bipartite else g.second_max_degree - 1
    return float(second), float(g.min_degree)


def kober_bound(s: SpectralSummary, a: float, tol: float = EQUALITY_TOL,
                bound: Optional[BoundId] = None) -> BoundReport:
    """Lower bound from the Kober mean-gap chain (EQ23 bipartite, EQ24 otherwise)."""
    _check_alpha(a)
    p, product = _product_branch(s)
    if bound is None:
        bound = BoundId.EQ23 if s.bipartite else BoundId.EQ24
    second, smallest = _kober_degrees(s)
    lhs, note = _lhs(s, a)
    rhs = kober_rhs(p, product, s.big_t, a, second, smallest)
    return make_report(bound, lhs, rhs, alpha=a, tol=tol, note=note)


def kober_q1_bound(s: SpectralSummary, a: float, tol: float = EQUALITY_TOL) -> BoundReport:
    """EQ26: the EQ24 bound with ``q_1`` in place of ``T``."""
    _check_alpha(a)
    _require(not s.bipartite, "needs a non-bipartite graph")
    p, product = _product_branch(s)
    second, smallest = _kober_degrees(s)
    rhs = kober_rhs(p, product, float(s.signless_spectrum[0]), a, second, smallest)
    return make_report(BoundId.EQ26, s_alpha(s, a), rhs, alpha=a, tol=tol)


def ie_kober_bound(s: SpectralSummary, tol: float = EQUALITY_TOL) -> BoundReport:
    """Incidence energy lower bound: the Kober bound at ``alpha = 1/2``."""
    _require(s.connected, "needs a connected graph")
    bound = BoundId.EQ27 if s.bipartite else BoundId.EQ28
    return kober_bound(s, 0.5, tol=tol, bound=bound)


# Comparison with the weaker degree estimate ----------------------------------------

@dataclass(frozen=True)
class Comparison:
    bound: BoundId
    alpha: float
    k: Optional[float]
    rhs: float
    proxy_rhs: float
    margin: float
    improves: bool


def tightness_compare(s: SpectralSummary, a: float, k: float,
                      tol: float = EQUALITY_TOL) -> list[Comparison]:
    """Evaluate the AM-GM and Kober bounds at ``T`` and at ``Delta_1 + 1``.

    Both right-hand sides increase in the stand-in for ``q_1`` beyond the
    geometric mean, and ``T >= Delta_1 + 1``, so the ``T`` version should be
    at least as large. ``margin`` is the difference; it is zero exactly when
    ``T = Delta_1 + 1``, i.e. when the minimum degree is 1.
    """
    _check_alpha(a)
    _require(k >= 0, "k must be non-negative")
    p, product = _product_branch(s)
    proxy = s.graph.max_degree + 1.0
    second, smallest = _kober_degrees(s)
    out = []
    if s.bipartite:
        ids = (BoundId.EQ16, BoundId.EQ23)
    else:
        ids = (BoundId.EQ17, BoundId.EQ24)
    for bound in ids:
        if bound in (BoundId.EQ16, BoundId.EQ17):
            new = amgm_rhs(p, product, s.big_t, a, k)
            old = amgm_rhs(p, product, proxy, a, k)
            kk = k
        else:
            new = kober_rhs(p, product, s.big_t, a, second, smallest)
            old = kober_rhs(p, product, proxy, a, second, smallest)
            kk = None
        margin = new - old
        out.append(Comparison(bound, a, kk, new, old, margin,
                              bool(margin >= -tol * max(1.0, abs(new)))))
    return out


# Scalar mean inequalities -------------------------------------------------------------

def weighted_amgm_gap(values: Sequence[float], weights: Sequence[float]) -> tuple[float, float]:
    """``(weighted AM - weighted GM, n * min(w) * (AM - GM))`` for positive ``values``.

    The first entry is never smaller than the second. Both vanish when all
    values coincide, and they are identical for uniform weights.
    """
    a = np.asarray(values, dtype=float)
    p = np.asarray(weights, dtype=float)
    if a.ndim != 1 or a.shape != p.shape or a.size == 0:
        raise ValueError("values and weights must be equal-length non-empty sequences")
    if np.any(a <= 0):
        raise ValueError("values must be positive")
    if np.any(p < 0) or abs(float(np.sum(p)) - 1.0) > 1e-12:
        raise ValueError("weights must be non-negative and sum to 1")
    n = a.size
    logs = np.log(a)
    lhs = float(np.dot(p, a) - math.exp(float(np.dot(p, logs))))
    rhs = float(n * np.min(p) * (np.mean(a) - math.exp(float(np.mean(logs)))))
    return lhs, rhs


def _mean_gap(a: np.ndarray) -> float:
    return float(np.mean(a) - math.exp(float(np.mean(np.log(a)))))


def kober_chain(values: Sequence[float]) -> list[tuple[int, float]]:
    """``[(p, p * (A_p - G_p)) for p = len(values) .. 2]`` over leading prefixes.

    ``A_p`` and ``G_p`` are the arithmetic and geometric means of the first
    ``p`` values; the second components are non-increasing along the list.
    """
    a = np.asarray(values, dtype=float)
    if a.size < 2:
        raise ValueError("need at least two values")
    if np.any(a <= 0):
        raise ValueError("values must be positive")
    return [(p, p * _mean_gap(a[:p])) for p in range(a.size, 1, -1)]


def kober_mean_bound(values: Sequence[float]) -> tuple[float, float]:
    """``(A_p, G_p + (sqrt(a_1) - sqrt(a_2))**2 / p)``; the first is never smaller."""
    a = np.asarray(values, dtype=float)
    if a.size < 2:
        raise ValueError("need at least two values")
    if np.any(a <= 0):
        raise ValueError("values must be positive")
    p = a.size
    geo = math.exp(float(np.mean(np.log(a))))
    return float(np.mean(a)), geo + (math.sqrt(a[0]) - math.sqrt(a[1])) ** 2 / p


# Structural lemmas -----------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one structural lemma: ``status`` is "pass", "fail" or "n/a"."""

    lemma: str
    status: str
    lhs: float = math.nan
    rhs: float = math.nan
    equality: bool = False
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status != "fail"


LEMMAS = (
    "degree_squares",
    "spectra_coincide",
    "tree_products",
    "q1_lower",
    "q2_lower",
    "qn_upper",
    "diameter_distinct",
    "mu2_lower",
    "mu_n1_upper",
    "equal_laplacian",
)


def _close(x, y, tol=EQUALITY_TOL):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def _rel_close(x, y, rtol=PRODUCT_RTOL):
    return abs(x - y) <= rtol * max(abs(x), abs(y), 1e-300)


def _na(name, reason):
    return LemmaReport(name, "n/a", detail=reason)


def _status(ok):
    return "pass" if ok else "fail"


def _lemma_degree_squares(g, s):
    if g.n < 2:
        return _na("degree_squares", "needs n >= 2")
    r = degree_square_bound(s)
    ok = r.holds
    detail = ""
    if s.connected:
        expected = gr.is_star(g) or gr.is_complete(g)
        ok = ok and r.equality == expected
        detail = f"equality expected={expected}"
    return LemmaReport("degree_squares", _status(ok), r.lhs, r.rhs, r.equality, detail)


def _lemma_spectra_coincide(g, s):
    q, mu = s.signless_spectrum, s.laplacian_spectrum
    gap = float(np.max(np.abs(q - mu), initial=0.0))
    coincide = gap <= EQUALITY_TOL * max(1.0, float(q[0]) if q.size else 1.0)
    ok = coincide == s.bipartite
    return LemmaReport("spectra_coincide", _status(ok), gap, 0.0, coincide,
                       f"bipartite={s.bipartite}")


def _lemma_tree_products(g, s):
    if not s.connected or g.n < 1:
        return _na("tree_products", "needs a connected graph")
    n = g.n
    lap_prod = float(np.prod(s.laplacian_spectrum[:-1]))
    ok = _rel_close(lap_prod, n * s.spanning_trees)
    if s.bipartite:
        q_prod = float(np.prod(s.signless_spectrum[:-1]))
        ok = ok and _rel_close(q_prod, n * s.spanning_trees)
        return LemmaReport("tree_products", _status(ok), lap_prod, n * s.spanning_trees, ok,
                           f"prod q[:-1]={q_prod:.12g}")
    q_prod = float(np.prod(s.signless_spectrum))
    ok = ok and _rel_close(q_prod, s.t1)
    return LemmaReport("tree_products", _status(ok), q_prod, s.t1, ok,
                       f"prod mu[:-1]={lap_prod:.12g} n*t={n * s.spanning_trees:.12g}")


def _lemma_q1_lower(g, s):
    if not s.connected or g.n < 3:
        return _na("q1_lower", "needs a connected graph with n >= 3")
    q1, big_t, base = float(s.signless_spectrum[0]), s.big_t, g.max_degree + 1.0
    tol = EQUALITY_TOL * max(1.0, q1)
    first = q1 >= big_t - tol
    second = big_t >= base - tol
    eq_first = abs(q1 - big_t) <= tol
    eq_second = abs(big_t - base) <= tol
    both = eq_first and eq_second
    star = gr.is_star(g)
    ok = first and second and both == star
    return LemmaReport("q1_lower", _status(ok), q1, big_t, both,
                       f"Delta1+1={base:g} q1=T:{eq_first} T=Delta1+1:{eq_second} star={star}")


def _lemma_q2_lower(g, s):
    if g.n < 2:
        return _na("q2_lower", "needs n >= 2")
    q2 = float(s.signless_spectrum[1])
    rhs = g.second_max_degree - 1.0
    tol = EQUALITY_TOL * max(1.0, q2)
    ok = q2 >= rhs - tol
    equal = abs(q2 - rhs) <= tol
    detail = ""
    if equal:
        top = max(g.degrees)
        hubs = [v for v, d in enumerate(g.degrees) if d == top]
        adjacent = any(g.has_edge(u, v) for i, u in enumerate(hubs) for v in hubs[i + 1:])
        detail = (f"observation: Delta1==Delta2 {top == g.second_max_degree}, "
                  f"max-degree vertices adjacent {adjacent}")
    return LemmaReport("q2_lower", _status(ok), q2, rhs, equal, detail)


def _lemma_qn_upper(g, s):
    if not s.connected or g.n < 2:
        return _na("qn_upper", "needs a connected graph with n >= 2")
    qn = float(s.signless_spectrum[-1])
    delta = float(g.min_degree)
    ok = delta - qn > EQUALITY_TOL * max(1.0, delta)
    return LemmaReport("qn_upper", _status(ok), qn, delta, False)


def _lemma_diameter_distinct(g, s):
    if not s.connected or g.n < 1:
        return _na("diameter_distinct", "needs a connected graph")
    lhs = gr.diameter(g) + 1
    rhs = distinct_count(s.signless_spectrum)
    return LemmaReport("diameter_distinct", _status(lhs <= rhs), float(lhs), float(rhs),
                       lhs == rhs)


def _lemma_mu2_lower(g, s):
    if not s.connected or g.n < 3:
        return _na("mu2_lower", "needs a connected graph with n >= 3")
    mu2 = float(s.laplacian_spectrum[1])
    rhs = float(g.second_max_degree)
    tol = EQUALITY_TOL * max(1.0, mu2)
    return LemmaReport("mu2_lower", _status(mu2 >= rhs - tol), mu2, rhs, abs(mu2 - rhs) <= tol)


def _lemma_mu_n1_upper(g, s):
    if g.n < 2 or gr.is_complete(g):
        return _na("mu_n1_upper", "needs n >= 2 and a non-complete graph")
    mu = float(s.laplacian_spectrum[-2])
    delta = float(g.min_degree)
    tol = EQUALITY_TOL * max(1.0, delta)
    return LemmaReport("mu_n1_upper", _status(mu <= delta + tol), mu, delta, abs(mu - delta) <= tol)


def _lemma_equal_laplacian(g, s):
    if g.n < 2:
        return _na("equal_laplacian", "needs n >= 2")
    mu = s.laplacian_spectrum[:-1]
    top = float(mu[0])
    equal = top - float(mu[-1]) <= EQUALITY_TOL * max(1.0, top)
    expected = gr.is_complete(g) or gr.is_empty(g)
    return LemmaReport("equal_laplacian", _status(equal == expected), top, float(mu[-1]), equal,
                       f"complete or empty={expected}")


_LEMMA_CHECKS = (
    _lemma_degree_squares,
    _lemma_spectra_coincide,
    _lemma_tree_products,
    _lemma_q1_lower,
    _lemma_q2_lower,
    _lemma_qn_upper,
    _lemma_diameter_distinct,
    _lemma_mu2_lower,
    _lemma_mu_n1_upper,
    _lemma_equal_laplacian,
)


def lemma_suite(g: gr.Graph, s: Optional[SpectralSummary] = None) -> list[LemmaReport]:
    """Run every structural lemma on ``g``; each one gates on its own hypotheses."""
    if s is None:
        s = summarize(g)
    return [check(g, s) for check in _LEMMA_CHECKS]
