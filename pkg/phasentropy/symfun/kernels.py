"""
Spectral kernel mu_{q,N}.

mu_{q,N}(lambda) = sum_i lambda_i^(q+N-1) / prod_{j != i} (lambda_i - lambda_j)

is the (N-1)-th divided difference of x^(q+N-1) at the nodes lambda, and
equals the complete homogeneous symmetric polynomial h_q(lambda) for
integer q. Three evaluators are provided plus a dispatcher:

- ``mu_eigensum``: the literal sum (separated spectra only)
- ``mu_homogeneous``: exact recurrence for integer q
- ``mu_divided_difference``: confluent Newton table on separated nodes,
  f(Z) on a bidiagonal Z for clustered ones; any spectrum

All kernels strip zero entries first; the result is homogeneous of degree
q in lambda, which ``log_mu`` exploits to avoid underflow at large q.
"""

from __future__ import annotations

from typing import Callable, Union

import numpy as np
import scipy.linalg
import scipy.signal
import scipy.special
from numpy.typing import ArrayLike

from phasentropy.core.config import (
    DISPATCH_GAP_RTOL,
    DIVIDED_DIFFERENCE_RTOL,
    EIGENSUM_GAP_TOL,
    INTEGER_Q_TOL,
    NODE_MERGE_RTOL,
)
from phasentropy.core.errors import DegeneracyError, DomainError
from phasentropy.spectra.types import Spectrum

SpectrumLike = Union[Spectrum, ArrayLike]
Derivative = Callable[[float, int], float]
MatrixFunction = Callable[[np.ndarray], np.ndarray]


# -----------------------------------------------------------------------------
# Helpers
# -----------------------------------------------------------------------------


def support_of(lam: SpectrumLike) -> np.ndarray:
    """Nonzero entries of a spectrum or of a raw non-negative vector."""
    if isinstance(lam, Spectrum):
        return lam.support
    v = np.asarray(lam, dtype=float).ravel()
    if v.size == 0 or not np.all(np.isfinite(v)) or v.min() < 0.0:
        raise DomainError(f"expected a non-empty non-negative vector, got {v}")
    v = v[v > 0.0]
    if v.size == 0:
        raise DomainError("vector has no positive entries")
    return v


def is_integer_order(q: float) -> bool:
    return bool(abs(q - round(q)) <= INTEGER_Q_TOL)


def _check_finite(q: float) -> float:
    q = float(q)
    if not np.isfinite(q):
        raise DomainError(f"moment order must be finite, got {q}")
    return q


def min_gap(v: np.ndarray) -> float:
    if v.size < 2:
        return np.inf
    return float(np.min(np.diff(np.sort(v))))


# -----------------------------------------------------------------------------
# Confluent divided differences
# -----------------------------------------------------------------------------


def merge_nodes(nodes: ArrayLike, rtol: float = NODE_MERGE_RTOL) -> np.ndarray:
    """Sort nodes and replace clusters closer than ``rtol * max|node|`` by their mean."""
    z = np.sort(np.asarray(nodes, dtype=float).ravel())
    if z.size < 2:
        return z
    tol = rtol * float(np.max(np.abs(z)))
    labels = np.concatenate([[0], np.cumsum(np.diff(z) > tol)])
    means = np.bincount(labels, weights=z) / np.bincount(labels)
    return means[labels]


def separation_threshold(n: int) -> float:
    """Relative gap above which a sum over 1 / prod(z_i - z_j) keeps DIVIDED_DIFFERENCE_RTOL.

    Cancellation in the Newton table and in the eigen-sum grows like
    eps * (max|z| / gap)^(n-1).
    """
    if n < 2:
        return 0.0
    return float((np.finfo(float).eps / DIVIDED_DIFFERENCE_RTOL) ** (1.0 / (n - 1)))


def is_well_separated(nodes: ArrayLike, floor: float = 0.0) -> bool:
    """True when the distinct nodes are far enough apart for the Newton table."""
    z = np.asarray(nodes, dtype=float).ravel()
    distinct = np.unique(z)
    if distinct.size < 2:
        return True
    rel_gap = min_gap(distinct) / float(np.max(np.abs(distinct)))
    return rel_gap > max(floor, separation_threshold(z.size))


def confluent_divided_difference(
    nodes: ArrayLike,
    derivative: Derivative,
    merge_rtol: float = NODE_MERGE_RTOL,
) -> float:
    """Top entry f[z_0, ..., z_{n-1}] of the Hermite divided-difference table.

    ``derivative(x, k)`` must return the k-th derivative of f at x. Nodes
    closer than ``merge_rtol`` (relative) are merged and treated as repeated,
    in which case f^(k)(x)/k! replaces the vanishing quotient.
    """
    z = merge_nodes(nodes, merge_rtol)
    n = z.size
    col = np.array([derivative(x, 0) for x in z], dtype=float)

    for j in range(1, n):
        dz = z[j:] - z[:-j]
        same = dz == 0.0
        new = np.empty(n - j)
        distinct = ~same
        new[distinct] = (col[1:][distinct] - col[:-1][distinct]) / dz[distinct]
        if same.any():
            fact = scipy.special.factorial(j, exact=True)
            new[same] = [derivative(z[i], j) / fact for i in np.flatnonzero(same)]
        col = new

    return float(col[0])


def matrix_divided_difference(
    nodes: ArrayLike,
    matrix_function: MatrixFunction,
    merge_rtol: float = NODE_MERGE_RTOL,
) -> float:
    """f[z_0, ..., z_{n-1}] read off f(Z) for the bidiagonal Z = diag(z) + s * superdiag(1).

    The top-right entry of f(Z) is s^(n-1) f[z_0, ..., z_{n-1}], including
    repeated nodes. ``matrix_function`` must evaluate f on a triangular
    matrix without an eigendecomposition, so clustered nodes cost no digits.
    The superdiagonal is scaled by s = max|z| to keep Z balanced.
    """
    z = merge_nodes(nodes, merge_rtol)
    n = z.size
    if n == 1:
        return float(np.real(matrix_function(z.reshape(1, 1))[0, 0]))
    s = float(np.max(np.abs(z)))
    bidiagonal = np.diag(z) + np.diag(np.full(n - 1, s), 1)
    top = np.real(matrix_function(bidiagonal)[0, -1])
    return float(top / s ** (n - 1))


def stable_divided_difference(
    nodes: ArrayLike,
    derivative: Derivative,
    matrix_function: MatrixFunction,
    merge_rtol: float = NODE_MERGE_RTOL,
) -> float:
    """Newton table on well-separated nodes, bidiagonal matrix function otherwise."""
    z = merge_nodes(nodes, merge_rtol)
    if is_well_separated(z):
        return confluent_divided_difference(z, derivative, merge_rtol)
    return matrix_divided_difference(z, matrix_function, merge_rtol)


def power_derivative(p: float) -> Derivative:
    """k-th derivative of x^p: p (p-1) ... (p-k+1) x^(p-k)."""

    def deriv(x: float, k: int) -> float:
        falling = np.prod(p - np.arange(k)) if k else 1.0
        if falling == 0.0:
            return 0.0
        return float(falling * x ** (p - k))

    return deriv


def power_matrix(p: float) -> MatrixFunction:
    """Z -> Z^p via inverse scaling and squaring on the triangular Z."""

    def func(z: np.ndarray) -> np.ndarray:
        return scipy.linalg.fractional_matrix_power(z, p)

    return func


def xlogx_power_derivative(n: int) -> Derivative:
    """k-th derivative of x^n ln x, for k <= n - 1."""

    def deriv(x: float, k: int) -> float:
        m = n - np.arange(k)
        falling = float(np.prod(m)) if k else 1.0
        # d/dn of the falling factorial (n)_k
        dfalling = sum(float(np.prod(np.delete(m, i))) for i in range(k))
        return float(x ** (n - k) * (falling * np.log(x) + dfalling))

    return deriv


def xlogx_power_matrix(n: int) -> MatrixFunction:
    """Z -> Z^n log Z."""

    def func(z: np.ndarray) -> np.ndarray:
        return np.linalg.matrix_power(z, n) @ scipy.linalg.logm(z)

    return func


# -----------------------------------------------------------------------------
# Evaluators
# -----------------------------------------------------------------------------


def mu_eigensum(q: float, lam: SpectrumLike) -> float:
    """Literal eigenvalue sum for mu_{q,N}; the spectrum must be non-degenerate.

    Also admits q = -1, where the sum vanishes identically.
    """
    q = _check_finite(q)
    if q < 0.0 and q != -1.0:
        raise DomainError(f"mu_eigensum needs q >= 0 or q = -1, got {q}")

    v = support_of(lam)
    gap = min_gap(v)
    if gap <= EIGENSUM_GAP_TOL:
        raise DegeneracyError(
            f"spectrum has a gap of {gap:.3e} <= {EIGENSUM_GAP_TOL:g}; "
            "use mu_divided_difference for degenerate spectra"
        )

    n = v.size
    diff = v[:, None] - v[None, :]
    np.fill_diagonal(diff, 1.0)
    return float(np.sum(v ** (q + n - 1) / np.prod(diff, axis=1)))


def mu_homogeneous(q: int, lam: SpectrumLike) -> float:
    """Complete homogeneous symmetric polynomial h_q(lambda), exact for integer q >= 0.

    Uses H[k][j] = H[k][j-1] + lambda_j H[k-1][j], i.e. multiplication of
    the generating series by 1 / (1 - lambda_j t) for each entry.
    """
    qf = _check_finite(q)
    if not is_integer_order(qf) or qf < 0:
        raise DomainError(f"mu_homogeneous needs an integer q >= 0, got {q}")
    k = int(round(qf))

    h = np.zeros(k + 1)
    h[0] = 1.0
    for x in support_of(lam):
        h = scipy.signal.lfilter([1.0], [1.0, -x], h)
    return float(h[k])


def mu_divided_difference(q: float, lam: SpectrumLike) -> float:
    """mu_{q,N} as the confluent divided difference of x^(q+N-1).

    Valid for q >= 1 - N (N = support size) and for degenerate spectra.
    """
    q = _check_finite(q)
    v = support_of(lam)
    n = v.size
    if q < 1 - n:
        raise DomainError(f"mu_divided_difference needs q >= {1 - n}, got {q}")
    if n == 1:
        return float(v[0] ** q)
    p = q + n - 1
    return stable_divided_difference(v, power_derivative(p), power_matrix(p))


def mu(q: float, lam: SpectrumLike) -> float:
    """Dispatching evaluator of mu_{q,N} for q > 0.

    Integer q goes to the exact recurrence, well-separated spectra to the
    eigen-sum, everything else to mu_divided_difference.
    """
    q = _check_finite(q)
    if q <= 0.0:
        raise DomainError(f"mu needs q > 0, got {q}")

    v = support_of(lam)
    if is_integer_order(q):
        return mu_homogeneous(int(round(q)), v)
    if v.size == 1:
        return float(v[0] ** q)
    if min_gap(v) > 0.0 and is_well_separated(v, floor=DISPATCH_GAP_RTOL):
        return mu_eigensum(q, v)
    return mu_divided_difference(q, v)


def log_mu(q: float, lam: SpectrumLike) -> float:
    """ln mu_{q,N}, evaluated on lambda / lambda_max to avoid underflow."""
    v = support_of(lam)
    top = float(v.max())
    return float(q * np.log(top) + np.log(mu(q, v / top)))
