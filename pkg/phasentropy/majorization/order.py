# phasentropy/majorization/order.py

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from phasentropy.core.config import MAJORIZATION_TOL
from phasentropy.core.errors import DomainError, StateValidationError
from phasentropy.spectra.random import flat_dirichlet, make_rng
from phasentropy.spectra.types import RngSeed, Spectrum


def majorizes(xi: Spectrum, lam: Spectrum, tol: float = MAJORIZATION_TOL) -> bool:
    """True iff ``lam`` is majorized by ``xi``.

    Both vectors sorted non-increasing, every partial sum of ``lam`` is at
    most the matching partial sum of ``xi``.
    """
    if len(xi) != len(lam):
        raise StateValidationError(
            f"majorization needs equal lengths, got {len(xi)} and {len(lam)}"
        )
    upper = np.cumsum(np.sort(np.asarray(xi, dtype=float))[::-1])
    lower = np.cumsum(np.sort(np.asarray(lam, dtype=float))[::-1])
    return bool(np.all(lower <= upper + tol))


@dataclass(frozen=True)
class MajorizationPair:
    """Spectra with ``lower`` majorized by ``upper``."""

    lower: Spectrum
    upper: Spectrum

    def __post_init__(self) -> None:
        if not majorizes(self.upper, self.lower):
            raise StateValidationError(
                f"{self.lower!r} is not majorized by {self.upper!r}"
            )

    @property
    def n(self) -> int:
        return len(self.upper)

    def to_dict(self) -> dict:
        return {"upper": self.upper.tolist(), "lower": self.lower.tolist()}


def birkhoff_mix(
    xi: Spectrum, permutations: ArrayLike, weights: ArrayLike
) -> Spectrum:
    """Apply the doubly-stochastic matrix sum_k w_k P_k to ``xi``.

    ``permutations`` has one permutation of range(n) per row and
    ``weights`` is a probability vector over the rows.
    """
    values = np.asarray(xi, dtype=float)
    n = values.size
    perms = np.atleast_2d(np.asarray(permutations, dtype=int))
    w = np.atleast_1d(np.asarray(weights, dtype=float))

    if perms.shape[1] != n or perms.shape[0] != w.size:
        raise DomainError(
            f"need one weight per permutation of length {n}, got permutations "
            f"{perms.shape} and weights {w.shape}"
        )
    if not np.all(np.sort(perms, axis=1) == np.arange(n)):
        raise DomainError("every row of 'permutations' must permute range(n)")
    if w.min() < 0.0 or abs(w.sum() - 1.0) > 1e-12:
        raise DomainError(f"weights must be a probability vector, got {w}")

    return Spectrum(w @ values[perms], ambient_dim=n)


def random_majorized_pair(n: int, seed: RngSeed) -> MajorizationPair:
    """Flat-Dirichlet ``upper`` and its image under a random Birkhoff mixture.

    The mixture uses 2n random permutations with flat-Dirichlet weights.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"random_majorized_pair needs n >= 2, got {n}")
    rng = make_rng(seed)
    xi = Spectrum(flat_dirichlet(rng, n))
    perms = np.stack([rng.permutation(n) for _ in range(2 * n)])
    weights = flat_dirichlet(rng, 2 * n)
    return MajorizationPair(lower=birkhoff_mix(xi, perms, weights), upper=xi)
