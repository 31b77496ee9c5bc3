# phasentropy/spectra/types.py

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg

from phasentropy.core.config import (
    CLAMP_TOL,
    HERMITIAN_TOL,
    NEGATIVE_TOL,
    NORM_TOL,
    RENORMALIZE_WARN_TOL,
    TRACE_TOL,
)
from phasentropy.core.errors import PositivityError, StateValidationError

# 64-bit unsigned seed; identical seeds give identical generated streams.
RngSeed = int


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


# -----------------------------------------------------------------------------
# Spectrum
# -----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Probability vector of eigenvalues or Schmidt coefficients.

    Entries are clamped (within 1e-12), renormalized to unit sum and stored
    sorted in non-increasing order. ``ambient_dim`` pads with zeros when it
    exceeds the number of given entries.
    """

    values: np.ndarray
    ambient_dim: Optional[int] = field(default=None)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float).ravel()
        n = arr.size if self.ambient_dim is None else int(self.ambient_dim)

        if arr.size == 0:
            raise StateValidationError("spectrum must have at least one entry")
        if n < arr.size:
            raise StateValidationError(
                f"ambient_dim={n} is smaller than the {arr.size} given entries"
            )
        if not np.all(np.isfinite(arr)):
            raise StateValidationError(f"spectrum contains non-finite entries: {arr}")
        if arr.min() < -NEGATIVE_TOL:
            raise StateValidationError(
                f"spectrum entry {arr.min():.3e} is below the tolerance -{NEGATIVE_TOL:g}"
            )

        arr = np.where(arr < 0.0, 0.0, arr)
        total = arr.sum()
        if total <= 0.0:
            raise StateValidationError("spectrum entries sum to zero")
        if abs(total - 1.0) > RENORMALIZE_WARN_TOL:
            warnings.warn(
                f"Spectrum entries sum to {total!r}; renormalizing to 1.",
                UserWarning,
                stacklevel=3,
            )

        arr = np.concatenate([arr / total, np.zeros(n - arr.size)])
        arr = -np.sort(-arr)

        object.__setattr__(self, "values", _frozen(arr))
        object.__setattr__(self, "ambient_dim", n)

    # ---------- constructors ----------

    @classmethod
    def flat(cls, n: int) -> "Spectrum":
        """Maximally mixed / maximally entangled spectrum (1/n, ..., 1/n)."""
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def pure(cls, n: int) -> "Spectrum":
        """Pure / separable spectrum (1, 0, ..., 0)."""
        return cls([1.0], ambient_dim=n)

    # ---------- accessors ----------

    def __len__(self) -> int:
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.values, precision=6)})"

    @property
    def support(self) -> np.ndarray:
        """Nonzero entries (expansibility lets kernels drop the zeros)."""
        return self.values[self.values > 0.0]

    @property
    def is_pure(self) -> bool:
        return self.support.size == 1

    @property
    def lambda_max(self) -> float:
        return float(self.values[0])

    def padded(self, n: int) -> "Spectrum":
        """The same spectrum extended by zeros to length ``n``."""
        return Spectrum(self.values, ambient_dim=n)

    def tolist(self) -> list:
        return [float(v) for v in self.values]


# -----------------------------------------------------------------------------
# States
# -----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HermitianState:
    """Density matrix: Hermitian, unit trace, positive semidefinite."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        rho = np.asarray(self.entries, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] == 0:
            raise StateValidationError(
                f"density matrix must be a non-empty square matrix, got shape {rho.shape}"
            )

        asym = np.max(np.abs(rho - rho.conj().T))
        if asym > HERMITIAN_TOL:
            raise StateValidationError(
                f"density matrix is not Hermitian: max |rho - rho^H| = {asym:.3e} "
                f"> {HERMITIAN_TOL:g}"
            )
        rho = 0.5 * (rho + rho.conj().T)

        trace = np.trace(rho).real
        if abs(trace - 1.0) > TRACE_TOL:
            raise StateValidationError(
                f"density matrix trace is {trace!r}, expected 1 within {TRACE_TOL:g}"
            )

        w_min = scipy.linalg.eigvalsh(rho)[0]
        if w_min < -CLAMP_TOL:
            raise PositivityError(
                f"density matrix has eigenvalue {w_min:.3e} < -{CLAMP_TOL:g}"
            )

        object.__setattr__(self, "entries", _frozen(rho))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_spectrum(cls, lam: Spectrum) -> "HermitianState":
        """Diagonal density matrix with the given eigenvalues."""
        return cls(np.diag(lam.values).astype(complex))


@dataclass(frozen=True, eq=False)
class BipartitePureState:
    """Pure state of an N x N system given by its coefficient matrix.

    Rectangular coefficient matrices are zero-padded to square.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim == 1:
            c = c.reshape(1, -1)
        if c.ndim != 2 or c.size == 0:
            raise StateValidationError(
                f"coefficients must form a non-empty matrix, got shape {c.shape}"
            )

        n = max(c.shape)
        if c.shape != (n, n):
            padded = np.zeros((n, n), dtype=complex)
            padded[: c.shape[0], : c.shape[1]] = c
            c = padded

        norm2 = float(np.sum(np.abs(c) ** 2))
        if abs(norm2 - 1.0) > NORM_TOL:
            raise StateValidationError(
                f"bipartite state has squared norm {norm2!r}, expected 1 within {NORM_TOL:g}"
            )

        object.__setattr__(self, "coeffs", _frozen(c / np.sqrt(norm2)))

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0]
