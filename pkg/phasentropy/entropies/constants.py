# phasentropy/entropies/constants.py

from __future__ import annotations

from typing import Literal

import numpy as np
import scipy.special

from phasentropy.core.config import Q_ONE_TOL
from phasentropy.core.errors import DomainError

Partition = Literal["mono", "bi"]

_PARTITION_POWER = {"mono": 1, "bi": 2}


def partition_power(partition: str) -> int:
    """1 for a single SU(N) phase space, 2 for the SU(N) x SU(N) product."""
    try:
        return _PARTITION_POWER[partition]
    except KeyError:
        raise DomainError(
            f"Unknown partition '{partition}'. Available partitions: mono, bi"
        ) from None


def _require_n(n: int) -> int:
    n = int(n)
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return n


def _require_q(q: float) -> float:
    q = float(q)
    if not np.isfinite(q) or q <= 0.0:
        raise DomainError(f"moment order must be finite and > 0, got {q}")
    return q


def c_n(n: int) -> float:
    """Wehrl entropy of any pure N-dimensional state: sum_{k=2}^N 1/k."""
    n = _require_n(n)
    return float(np.sum(1.0 / np.arange(2, n + 1)))


def log_moment_prefactor(n: int, q: float, partition: Partition = "mono") -> float:
    """ln of N! Gamma(q+1) / Gamma(q+N), squared for the bipartite product."""
    n = _require_n(n)
    log_p = (
        scipy.special.gammaln(n + 1)
        + scipy.special.gammaln(q + 1)
        - scipy.special.gammaln(q + n)
    )
    return float(partition_power(partition) * log_p)


def moment_prefactor(n: int, q: float, partition: Partition = "mono") -> float:
    return float(np.exp(log_moment_prefactor(n, q, partition)))


def c_nq(n: int, q: float) -> float:
    """Minimal Renyi-Wehrl entropy of order q, attained on pure states."""
    n = _require_n(n)
    q = _require_q(q)
    if abs(q - 1.0) < Q_ONE_TOL:
        return c_n(n)
    return log_moment_prefactor(n, q) / (1.0 - q)


def max_renyi_subentropy(n: int, q: float) -> float:
    """Renyi subentropy of the flat spectrum (1/N, ..., 1/N).

    Uses mu_{q,N}(flat) = C(q+N-1, N-1) N^(-q), i.e. the (N-1)! form.
    For q -> 1 this is ln N - C_N.
    """
    n = _require_n(n)
    q = _require_q(q)
    if abs(q - 1.0) < Q_ONE_TOL:
        return float(np.log(n)) - c_n(n)
    log_mu_flat = (
        scipy.special.gammaln(q + n)
        - scipy.special.gammaln(q + 1)
        - scipy.special.gammaln(n)
        - q * np.log(n)
    )
    return float(log_mu_flat / (1.0 - q))


def printed_max_renyi_subentropy(n: int, q: float) -> float:
    """Flat-spectrum maximum with N! in place of (N-1)!.

    Kept only to document that this variant disagrees with direct
    evaluation of mu at the flat spectrum; its q -> 1 limit is C_N - ln N.
    """
    n = _require_n(n)
    q = _require_q(q)
    if abs(q - 1.0) < Q_ONE_TOL:
        return c_n(n) - float(np.log(n))
    log_value = (
        scipy.special.gammaln(q + n)
        - scipy.special.gammaln(q + 1)
        - scipy.special.gammaln(n + 1)
        - q * np.log(n)
    )
    return float(log_value / (1.0 - q))
