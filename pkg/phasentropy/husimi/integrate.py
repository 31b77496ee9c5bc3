# phasentropy/husimi/integrate.py

"""
Monte-Carlo integration over phase space.

The invariant measure on CP^{N-1} is normalized to total mass N, the
value fixed by the resolution of identity N E[|alpha><alpha|] = 1 and by
m_1 = 1. Each estimator therefore multiplies a plain sample mean by N,
or by N^2 on the product CP^{N-1} x CP^{N-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.special

from phasentropy.core.config import H_FLOOR
from phasentropy.core.errors import DomainError, StateValidationError
from phasentropy.husimi.coherent import (
    _require_phase_space_dim,
    draw_coherent_states,
    husimi_bi_batch,
    husimi_mono_batch,
)
from phasentropy.spectra.types import BipartitePureState, HermitianState, RngSeed
from phasentropy.symfun.montecarlo import (
    McEstimate,
    chunked_estimate,
    chunked_moments,
)

State = Union[HermitianState, BipartitePureState]


def _require_order(q: float) -> float:
    q = float(q)
    if not np.isfinite(q) or q <= 0.0:
        raise DomainError(f"moment order must be finite and > 0, got {q}")
    return q


def _husimi_sampler(state: State):
    """(draw_h, mass): a sampler of Husimi values under the invariant measure."""
    if isinstance(state, HermitianState):
        rho, n = state.entries, _require_phase_space_dim(state.dim)

        def draw_h(rng: np.random.Generator, size: int) -> np.ndarray:
            return husimi_mono_batch(rho, draw_coherent_states(rng, n, size))

        return draw_h, float(n)

    if isinstance(state, BipartitePureState):
        coeffs, n = state.coeffs, _require_phase_space_dim(state.dim)

        def draw_h(rng: np.random.Generator, size: int) -> np.ndarray:
            alphas = draw_coherent_states(rng, n, size)
            betas = draw_coherent_states(rng, n, size)
            return husimi_bi_batch(coeffs, alphas, betas)

        return draw_h, float(n * n)

    raise StateValidationError(
        f"expected HermitianState or BipartitePureState, got {type(state).__name__}"
    )


def _moment(state: State, q: float, samples: int, seed: RngSeed) -> McEstimate:
    q = _require_order(q)
    draw_h, mass = _husimi_sampler(state)

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        return draw_h(rng, size) ** q

    return chunked_estimate(draw, samples, seed, scale=mass)


def mc_moment_mono(
    rho: HermitianState, q: float, samples: int, seed: RngSeed
) -> McEstimate:
    """Estimate m_q = int H^q dmu for a density matrix."""
    if not isinstance(rho, HermitianState):
        raise StateValidationError("mc_moment_mono expects a HermitianState")
    return _moment(rho, q, samples, seed)


def mc_moment_bi(
    psi: BipartitePureState, q: float, samples: int, seed: RngSeed
) -> McEstimate:
    """Estimate m_q = int int H^q dmu_A dmu_B for a bipartite pure state."""
    if not isinstance(psi, BipartitePureState):
        raise StateValidationError("mc_moment_bi expects a BipartitePureState")
    return _moment(psi, q, samples, seed)


def mc_wehrl(state: State, samples: int, seed: RngSeed) -> McEstimate:
    """Estimate the Wehrl entropy -int H ln H dmu; H below 1e-300 contributes 0."""
    draw_h, mass = _husimi_sampler(state)

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        h = draw_h(rng, size)
        return np.where(h < H_FLOOR, 0.0, scipy.special.entr(h))

    return chunked_estimate(draw, samples, seed, scale=mass)


# -----------------------------------------------------------------------------
# Resolution of identity
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityResolution:
    """Sampled N E[|alpha><alpha|] with entrywise standard errors."""

    mean: np.ndarray
    std_error_re: np.ndarray
    std_error_im: np.ndarray
    samples: int
    seed: RngSeed

    def sigma_deviation(self) -> np.ndarray:
        """Entrywise distance from the identity in standard errors (0/0 counts as 0)."""
        n = self.mean.shape[0]
        dev_re = np.abs(self.mean.real - np.eye(n))
        dev_im = np.abs(self.mean.imag)

        def scaled(dev: np.ndarray, se: np.ndarray) -> np.ndarray:
            out = np.zeros_like(dev)
            nonzero = se > 0.0
            out[nonzero] = dev[nonzero] / se[nonzero]
            out[~nonzero & (dev > 1e-12)] = np.inf
            return out

        return np.maximum(scaled(dev_re, self.std_error_re), scaled(dev_im, self.std_error_im))


def resolution_of_identity(n: int, samples: int, seed: RngSeed) -> IdentityResolution:
    """Monte-Carlo check of N E[|alpha><alpha|] = 1 under Fubini-Study sampling."""
    n = _require_phase_space_dim(n)

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        a = draw_coherent_states(rng, n, size)
        outer = (a[:, :, None] * a[:, None, :].conj()).reshape(size, n * n)
        return np.concatenate([outer.real, outer.imag], axis=1)

    mean, std_error = chunked_moments(draw, samples, seed)
    mean, std_error = n * mean, n * std_error
    k = n * n
    return IdentityResolution(
        mean=(mean[:k] + 1j * mean[k:]).reshape(n, n),
        std_error_re=std_error[:k].reshape(n, n),
        std_error_im=std_error[k:].reshape(n, n),
        samples=int(samples),
        seed=int(seed),
    )
