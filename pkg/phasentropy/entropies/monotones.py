# phasentropy/entropies/monotones.py

"""
Entropy-like functionals of a spectrum. All values are in nats.

Kernels act on the support of the spectrum; the ambient dimension only
enters through C_N and the moment prefactors.
"""

from __future__ import annotations

import numpy as np
import scipy.special

from phasentropy.core.config import Q_ONE_TOL, WEHRL_H_RANGE
from phasentropy.core.errors import SamplingConfigError, StateValidationError
from phasentropy.entropies.constants import (
    Partition,
    _require_q,
    c_n,
    log_moment_prefactor,
    partition_power,
)
from phasentropy.spectra.types import Spectrum
from phasentropy.symfun.kernels import (
    log_mu,
    mu,
    stable_divided_difference,
    xlogx_power_derivative,
    xlogx_power_matrix,
)


def _as_spectrum(lam) -> Spectrum:
    return lam if isinstance(lam, Spectrum) else Spectrum(lam)


def _near_one(q: float) -> bool:
    return abs(q - 1.0) < Q_ONE_TOL


def _check_dim(lam: Spectrum, n: int) -> None:
    if len(lam) != int(n):
        raise StateValidationError(
            f"spectrum has ambient dimension {len(lam)} but n={n} was requested; "
            "pad the spectrum with Spectrum.padded(n)"
        )


# -----------------------------------------------------------------------------
# Reference entropies
# -----------------------------------------------------------------------------


def von_neumann(lam: Spectrum) -> float:
    """-sum lambda ln lambda."""
    lam = _as_spectrum(lam)
    return float(np.sum(scipy.special.entr(lam.values)))


def renyi_entropy(q: float, lam: Spectrum) -> float:
    """Renyi entropy ln(sum lambda^q) / (1 - q), Shannon at q -> 1."""
    q = _require_q(q)
    lam = _as_spectrum(lam)
    if _near_one(q):
        return von_neumann(lam)
    value = scipy.special.logsumexp(q * np.log(lam.support)) / (1.0 - q)
    return float(max(value, 0.0))


# -----------------------------------------------------------------------------
# Subentropy family
# -----------------------------------------------------------------------------


def subentropy(lam: Spectrum) -> float:
    """Subentropy Q(lambda).

    Evaluated as the negated divided difference of x^N ln x over the
    support, which stays finite at degenerate spectra such as the flat one
    and keeps its digits when eigenvalues cluster without coinciding.
    """
    v = _as_spectrum(lam).support
    if v.size == 1:
        return 0.0
    n = v.size
    value = -stable_divided_difference(
        v, xlogx_power_derivative(n), xlogx_power_matrix(n)
    )
    return float(max(value, 0.0))


def renyi_subentropy(q: float, lam: Spectrum) -> float:
    """Renyi subentropy Q_q = ln mu_{q,N} / (1 - q); Q at q -> 1."""
    q = _require_q(q)
    lam = _as_spectrum(lam)
    if _near_one(q):
        return subentropy(lam)
    return float(max(log_mu(q, lam) / (1.0 - q), 0.0))


def rescaled_moment(q: float, lam: Spectrum) -> float:
    """Tsallis-type moment M_q = (mu_{q,N} - 1) / (1 - q); Q at q -> 1."""
    q = _require_q(q)
    lam = _as_spectrum(lam)
    if _near_one(q):
        return subentropy(lam)
    return float((mu(q, lam) - 1.0) / (1.0 - q))


# -----------------------------------------------------------------------------
# Wehrl entropies
# -----------------------------------------------------------------------------


def wehrl_entropy_mono(lam: Spectrum, n: int) -> float:
    """Wehrl entropy of a density matrix with spectrum ``lam``: Q + C_N."""
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    return subentropy(lam) + c_n(n)


def wehrl_entropy_bi(lam: Spectrum, n: int) -> float:
    """Wehrl entropy of an N x N pure state with Schmidt spectrum ``lam``: Q + 2 C_N."""
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    return subentropy(lam) + 2.0 * c_n(n)


def wehrl_entropy(lam: Spectrum, n: int, partition: Partition = "mono") -> float:
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    return subentropy(lam) + partition_power(partition) * c_n(n)


def entropy_excess(lam: Spectrum, n: int, partition: Partition = "mono") -> float:
    """Wehrl entropy above its pure (or separable) floor.

    The floor cancels exactly, so this is the subentropy in both partitions.
    """
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    partition_power(partition)
    return subentropy(lam)


def husimi_moment(q: float, lam: Spectrum, n: int, partition: Partition = "mono") -> float:
    """Closed-form Husimi moment m_q = P(N, q) mu_{q,N}(lambda)."""
    q = _require_q(q)
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    return float(np.exp(log_moment_prefactor(n, q, partition) + log_mu(q, lam)))


def renyi_wehrl(q: float, lam: Spectrum, n: int, partition: Partition = "mono") -> float:
    """Renyi-Wehrl entropy ln(m_q) / (1 - q); the Wehrl entropy at q -> 1."""
    q = _require_q(q)
    lam = _as_spectrum(lam)
    _check_dim(lam, n)
    if _near_one(q):
        return wehrl_entropy(lam, n, partition)
    return float((log_moment_prefactor(n, q, partition) + log_mu(q, lam)) / (1.0 - q))


def wehrl_via_q_limit(
    lam: Spectrum, n: int, partition: Partition = "mono", h: float = 1e-4
) -> float:
    """Wehrl entropy as -dm_q/dq at q = 1, by a central difference of step ``h``."""
    lo, hi = WEHRL_H_RANGE
    if not lo <= h <= hi:
        raise SamplingConfigError(f"step h must lie in [{lo:g}, {hi:g}], got {h}")
    up = husimi_moment(1.0 + h, lam, n, partition)
    down = husimi_moment(1.0 - h, lam, n, partition)
    return float(-(up - down) / (2.0 * h))
