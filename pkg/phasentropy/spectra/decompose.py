# phasentropy/spectra/decompose.py

import numpy as np
import scipy.linalg

from phasentropy.core.config import CLAMP_TOL
from phasentropy.core.errors import PositivityError
from phasentropy.spectra.types import BipartitePureState, HermitianState, Spectrum


def _clamped_spectrum(w: np.ndarray, ambient_dim: int) -> Spectrum:
    if w.min() < -CLAMP_TOL:
        raise PositivityError(f"eigenvalue {w.min():.3e} < -{CLAMP_TOL:g}")
    w = np.where(w < 0.0, 0.0, w)
    return Spectrum(w, ambient_dim=ambient_dim)


def eigen_spectrum(rho: HermitianState) -> Spectrum:
    """Eigenvalues of a density matrix, sorted non-increasing.

    Uses the LAPACK symmetric eigensolver (backward stable); values in
    [-1e-10, 0) are clamped to zero before renormalization.
    """
    return _clamped_spectrum(scipy.linalg.eigvalsh(rho.entries), rho.dim)


def reduced_density(psi: BipartitePureState) -> HermitianState:
    """Reduced density matrix C C^H of a bipartite pure state."""
    c = psi.coeffs
    rho = c @ c.conj().T
    return HermitianState(0.5 * (rho + rho.conj().T))


def schmidt_spectrum(psi: BipartitePureState) -> Spectrum:
    """Schmidt coefficients of a bipartite pure state.

    Computed as eigenvalues of the Gram matrix C C^H, so only a symmetric
    eigensolve is needed.
    """
    c = psi.coeffs
    gram = c @ c.conj().T
    gram = 0.5 * (gram + gram.conj().T)
    return _clamped_spectrum(scipy.linalg.eigvalsh(gram), psi.dim)


def schmidt_form(lam: Spectrum) -> BipartitePureState:
    """Canonical pure state sum_i sqrt(lambda_i) |i>|i>."""
    return BipartitePureState(np.diag(np.sqrt(lam.values)).astype(complex))
