"""
Reproducible random states.

Every generator takes an explicit seed and builds its own
``numpy.random.Generator``; no global random state is touched.
"""

from __future__ import annotations

import numpy as np

from phasentropy.core.errors import DomainError
from phasentropy.spectra.types import (
    BipartitePureState,
    HermitianState,
    RngSeed,
    Spectrum,
)


def make_rng(seed: RngSeed | np.random.SeedSequence) -> np.random.Generator:
    """Generator for a 64-bit seed or an already spawned SeedSequence."""
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.default_rng(seed)


def derive_seed(seed: RngSeed, *keys: int) -> RngSeed:
    """Deterministic sub-seed for the stream identified by ``keys``."""
    ss = np.random.SeedSequence([int(seed), *(int(k) for k in keys)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _require_dim(n: int, minimum: int = 1) -> int:
    n = int(n)
    if n < minimum:
        raise DomainError(f"dimension must be >= {minimum}, got {n}")
    return n


def flat_dirichlet(rng: np.random.Generator, n: int, size=None) -> np.ndarray:
    """Uniform samples on the (n-1)-simplex via normalized exponentials."""
    shape = (n,) if size is None else (size, n)
    e = rng.standard_exponential(shape)
    return e / e.sum(axis=-1, keepdims=True)


def random_spectrum(n: int, seed: RngSeed) -> Spectrum:
    """Flat-Dirichlet random spectrum of length ``n``, sorted."""
    n = _require_dim(n)
    return Spectrum(flat_dirichlet(make_rng(seed), n))


def ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    """n x n matrix of independent standard complex Gaussians."""
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_pure_bipartite(n: int, seed: RngSeed) -> BipartitePureState:
    """Haar-random pure state on C^n (x) C^n."""
    n = _require_dim(n)
    c = ginibre(make_rng(seed), n)
    return BipartitePureState(c / np.linalg.norm(c))


def random_unitary(n: int, seed: RngSeed) -> np.ndarray:
    """Haar-random n x n unitary (QR of a Ginibre matrix with phase fix)."""
    n = _require_dim(n)
    q, r = np.linalg.qr(ginibre(make_rng(seed), n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_density(n: int, seed: RngSeed) -> HermitianState:
    """Reduced state of a Haar-random n x n pure state (induced measure)."""
    c = random_pure_bipartite(n, seed).coeffs
    rho = c @ c.conj().T
    return HermitianState(0.5 * (rho + rho.conj().T))
