# phasentropy/husimi/coherent.py

"""
SU(N) coherent states and Husimi functions.

Every pure state of C^N is SU(N)-coherent, so a coherent state is just a
unit vector written in squared-magnitude / phase coordinates. Batched
helpers operate on arrays of shape (samples, N).
"""

from __future__ import annotations

import numpy as np

from phasentropy.core.errors import DomainError, StateValidationError
from phasentropy.husimi.types import CoherentPoint, StateVector
from phasentropy.spectra.decompose import schmidt_form, schmidt_spectrum
from phasentropy.spectra.random import flat_dirichlet, make_rng
from phasentropy.spectra.types import (
    BipartitePureState,
    HermitianState,
    RngSeed,
)

# -----------------------------------------------------------------------------
# Coherent states
# -----------------------------------------------------------------------------


def coherent_amplitudes(x: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Amplitudes (sqrt(1 - sum x), sqrt(x_i) e^{i phi_i}) for stacked coordinates."""
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    head = np.sqrt(np.clip(1.0 - x.sum(axis=-1, keepdims=True), 0.0, None))
    tail = np.sqrt(x) * np.exp(1j * phi)
    return np.concatenate([head.astype(complex), tail], axis=-1)


def coherent_state(p: CoherentPoint) -> StateVector:
    """Coherent state |alpha> at ``p``."""
    return StateVector(coherent_amplitudes(p.x, p.phi))


def _require_phase_space_dim(n: int) -> int:
    n = int(n)
    if n < 2:
        raise DomainError(f"phase space CP^(N-1) needs N >= 2, got {n}")
    return n


def draw_coherent_states(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    """``size`` Fubini-Study distributed coherent states as rows of a (size, n) array.

    Squared magnitudes are flat-Dirichlet over all n components and phases
    uniform; the reference component keeps phase 0.
    """
    w = flat_dirichlet(rng, n, size)
    phi = rng.uniform(0.0, 2.0 * np.pi, (size, n - 1))
    phases = np.concatenate([np.ones((size, 1)), np.exp(1j * phi)], axis=1)
    return np.sqrt(w) * phases


def coherent_states(n: int, size: int, seed: RngSeed) -> np.ndarray:
    """Seeded batch version of :func:`sample_fubini_study`, as raw amplitudes."""
    n = _require_phase_space_dim(n)
    return draw_coherent_states(make_rng(seed), n, int(size))


def sample_fubini_study(n: int, seed: RngSeed) -> CoherentPoint:
    """One point drawn from the unitarily invariant measure on CP^{n-1}."""
    n = _require_phase_space_dim(n)
    rng = make_rng(seed)
    w = flat_dirichlet(rng, n)
    phi = rng.uniform(0.0, 2.0 * np.pi, n - 1)
    return CoherentPoint(w[1:], phi)


# -----------------------------------------------------------------------------
# Husimi functions
# -----------------------------------------------------------------------------


def _check_match(state_dim: int, point_dim: int, what: str) -> None:
    if state_dim != point_dim:
        raise StateValidationError(
            f"{what} has dimension {state_dim} but the coherent point lives in "
            f"CP^{point_dim - 1}"
        )


def husimi_mono_batch(rho: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """<alpha|rho|alpha> for each row of ``alphas``."""
    values = np.einsum("si,ij,sj->s", alphas.conj(), rho, alphas).real
    return np.clip(values, 0.0, 1.0)


def husimi_bi_batch(
    coeffs: np.ndarray, alphas: np.ndarray, betas: np.ndarray
) -> np.ndarray:
    """|<Psi|alpha (x) beta>|^2 for paired rows of ``alphas`` and ``betas``."""
    overlap = np.einsum("ij,si,sj->s", coeffs.conj(), alphas, betas)
    return np.clip(np.abs(overlap) ** 2, 0.0, 1.0)


def husimi_mono(rho: HermitianState, p: CoherentPoint) -> float:
    """Husimi function H(alpha) = <alpha|rho|alpha> of a density matrix."""
    _check_match(rho.dim, p.n, "density matrix")
    alpha = coherent_state(p).amplitudes[None, :]
    return float(husimi_mono_batch(rho.entries, alpha)[0])


def husimi_bi(
    psi: BipartitePureState,
    pa: CoherentPoint,
    pb: CoherentPoint,
    schmidt_basis: bool = False,
) -> float:
    """Husimi function |<Psi|alpha_A (x) alpha_B>|^2 of a bipartite pure state.

    With ``schmidt_basis=True`` the state is first replaced by
    sum_i sqrt(lambda_i) |i>|i>, its local-unitary normal form.
    """
    _check_match(psi.dim, pa.n, "bipartite state")
    _check_match(psi.dim, pb.n, "bipartite state")
    coeffs = schmidt_form(schmidt_spectrum(psi)).coeffs if schmidt_basis else psi.coeffs
    alpha = coherent_state(pa).amplitudes[None, :]
    beta = coherent_state(pb).amplitudes[None, :]
    return float(husimi_bi_batch(coeffs, alpha, beta)[0])
