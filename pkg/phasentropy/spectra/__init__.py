from phasentropy.spectra.types import (
    BipartitePureState,
    HermitianState,
    RngSeed,
    Spectrum,
)
from phasentropy.spectra.decompose import (
    eigen_spectrum,
    reduced_density,
    schmidt_form,
    schmidt_spectrum,
)
from phasentropy.spectra.random import (
    derive_seed,
    make_rng,
    random_density,
    random_pure_bipartite,
    random_spectrum,
    random_unitary,
)

__all__ = [
    "BipartitePureState",
    "HermitianState",
    "RngSeed",
    "Spectrum",
    "derive_seed",
    "eigen_spectrum",
    "make_rng",
    "random_density",
    "random_pure_bipartite",
    "random_spectrum",
    "random_unitary",
    "reduced_density",
    "schmidt_form",
    "schmidt_spectrum",
]
