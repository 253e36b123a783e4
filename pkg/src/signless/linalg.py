"""Dense symmetric eigenvalues and determinants.

Eigenvalues come from the cyclic Jacobi rotation method; determinants from
Gaussian elimination with partial pivoting. Only numpy array storage is
used, no LAPACK routines.
"""

from __future__ import annotations

import math

import numpy as np

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
ZERO_CLAMP = 1e-8
SMALL_ORDER = 24


class ConvergenceError(RuntimeError):
    """Jacobi iteration did not reach the off-diagonal tolerance."""


def symmetric(entries, atol: float = 0.0) -> np.ndarray:
    """Validate ``entries`` as a real symmetric matrix and return a float copy.

    Entries must agree with their transpose to within ``atol``; the result is
    exactly symmetrised.
    """
    a = np.array(entries, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if np.max(np.abs(a - a.T), initial=0.0) > atol:
        raise ValueError("matrix is not symmetric")
    return (a + a.T) / 2


def _off_norm(a: np.ndarray) -> float:
    upper = np.triu(a, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def eigenvalues_sym(m, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted non-increasing.

    Cyclic Jacobi sweeps run until the off-diagonal Frobenius norm drops
    below ``tol * max(1, ||m||_F)``. Raises :class:`ConvergenceError` after
    ``max_sweeps`` sweeps.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = symmetric(m)
    n = a.shape[0]
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    # Per-element Python loops beat numpy row operations on small orders.
    if n <= SMALL_ORDER:
        diag = _jacobi_lists(a.tolist(), threshold, max_sweeps)
    else:
        diag = _jacobi_rows(a, threshold, max_sweeps)
    return np.sort(np.array(diag, dtype=float))[::-1].copy()


def _rotation(app, aqq, apq):
    theta = (aqq - app) / (2.0 * apq)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    return t, c, t * c


def _jacobi_lists(a, threshold, max_sweeps):
    n = len(a)
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0 * sum(a[p][q] ** 2 for p in range(n) for q in range(p + 1, n)))
        if off < threshold:
            return [a[i][i] for i in range(n)]
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if apq == 0.0:
                    continue
                row_q = a[q]
                app = row_p[p]
                aqq = row_q[q]
                t, c, s = _rotation(app, aqq, apq)
                for r in range(n):
                    x = row_p[r]
                    y = row_q[r]
                    new_x = c * x - s * y
                    new_y = s * x + c * y
                    row_p[r] = new_x
                    row_q[r] = new_y
                    a[r][p] = new_x
                    a[r][q] = new_y
                row_p[p] = app - t * apq
                row_q[q] = aqq + t * apq
                row_p[q] = row_q[p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def _jacobi_rows(a, threshold, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) < threshold:
            return np.diagonal(a).copy()
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                t, c, s = _rotation(app, aqq, apq)
                row_p = a[p].copy()
                row_q = a[q].copy()
                new_p = c * row_p - s * row_q
                new_q = s * row_p + c * row_q
                a[p] = new_p
                a[q] = new_q
                a[:, p] = new_p
                a[:, q] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def clamp_zero(values: np.ndarray, eps: float = ZERO_CLAMP) -> np.ndarray:
    """Set entries within ``eps`` of zero to exactly zero."""
    out = np.array(values, dtype=float)
    out[np.abs(out) < eps] = 0.0
    return out


def determinant(m) -> float:
    """Determinant by partial-pivot elimination; the sign follows row swaps."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    det = 1.0
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0.0:
            return 0.0
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            det = -det
        det *= a[col, col]
        if col + 1 < n:
            factors = a[col + 1:, col] / a[col, col]
            a[col + 1:, col:] -= np.outer(factors, a[col, col:])
    return float(det)


def principal_minor(m, drop_index: int) -> np.ndarray:
    """``m`` with row and column ``drop_index`` removed."""
    a = np.asarray(m)
    n = a.shape[0]
    if not 0 <= drop_index < n:
        raise IndexError(f"drop_index {drop_index} out of range for order {n}")
    keep = [i for i in range(n) if i != drop_index]
    return a[np.ix_(keep, keep)]
