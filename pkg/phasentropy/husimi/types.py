# phasentropy/husimi/types.py

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from phasentropy.core.errors import DomainError, StateValidationError

_COORD_TOL = 1e-12
_NORM_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class CoherentPoint:
    """Point of CP^{N-1} in squared-magnitude / phase coordinates.

    ``x`` holds |alpha_i|^2 for i = 1..N-1 and ``phi`` the matching phases;
    the weight of the reference basis state is 1 - sum(x).
    """

    x: np.ndarray
    phi: np.ndarray

    def __post_init__(self) -> None:
        x = np.atleast_1d(np.asarray(self.x, dtype=float))
        phi = np.atleast_1d(np.asarray(self.phi, dtype=float))
        if x.ndim != 1 or x.shape != phi.shape:
            raise DomainError(
                f"x and phi must be 1-D with equal length, got {x.shape} and {phi.shape}"
            )
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(phi))):
            raise DomainError("coherent-state coordinates must be finite")
        if x.size and x.min() < -_COORD_TOL:
            raise DomainError(f"x entries must be >= 0, got {x.min():.3e}")
        if x.sum() > 1.0 + _COORD_TOL:
            raise DomainError(f"x entries must sum to <= 1, got {x.sum()!r}")

        object.__setattr__(self, "x", _readonly(np.clip(x, 0.0, 1.0)))
        object.__setattr__(self, "phi", _readonly(np.mod(phi, 2.0 * np.pi)))

    @property
    def n(self) -> int:
        return self.x.size + 1

    @classmethod
    def origin(cls, n: int) -> "CoherentPoint":
        """The point whose coherent state is the reference state |0>."""
        return cls(np.zeros(n - 1), np.zeros(n - 1))


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit vector in C^N."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitudes, dtype=complex).ravel()
        norm = np.linalg.norm(a)
        if a.size == 0 or abs(norm - 1.0) > _NORM_TOL:
            raise StateValidationError(f"state vector must have norm 1, got {norm!r}")
        object.__setattr__(self, "amplitudes", _readonly(a))

    @property
    def n(self) -> int:
        return self.amplitudes.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)
