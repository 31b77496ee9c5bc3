# phasentropy/symfun/oracle.py

import numpy as np
import scipy.special

from phasentropy.core.errors import DomainError
from phasentropy.spectra.random import flat_dirichlet
from phasentropy.spectra.types import RngSeed, Spectrum
from phasentropy.symfun.montecarlo import McEstimate, chunked_estimate


def simplex_prefactor(q: float, n: int) -> float:
    """Gamma(q+N) / Gamma(q+1) times the simplex volume 1/(N-1)!."""
    return float(
        np.exp(
            scipy.special.gammaln(q + n)
            - scipy.special.gammaln(q + 1)
            - scipy.special.gammaln(n)
        )
    )


def mu_simplex_oracle(
    q: float, lam: Spectrum, samples: int, seed: RngSeed
) -> McEstimate:
    """Monte-Carlo estimate of mu_{q,N} from its simplex-integral representation.

    mu_{q,N} = Gamma(q+N)/Gamma(q+1) * int_Delta dx (lambda . x)^q, with x
    drawn uniformly on the probability simplex.
    """
    q = float(q)
    if not np.isfinite(q) or q <= 0.0:
        raise DomainError(f"mu_simplex_oracle needs q > 0, got {q}")

    values = np.asarray(lam.values, dtype=float)
    n = values.size

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        return (flat_dirichlet(rng, n, size) @ values) ** q

    return chunked_estimate(draw, samples, seed, scale=simplex_prefactor(q, n))
