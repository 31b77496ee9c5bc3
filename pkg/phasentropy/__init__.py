# SPDX-License-Identifier: EUPL-1.2
#
# phasentropy – Wehrl entropies, subentropies and Renyi-type entanglement
# monotones computed in phase space
#

from importlib.metadata import version as _version

# -----------------------------------------------------------------------------
# Version
# -----------------------------------------------------------------------------
try:
    __version__ = _version("phasentropy")
except Exception:
    __version__ = "9999"

# -----------------------------------------------------------------------------
# Core namespaces (public API)
# -----------------------------------------------------------------------------
from phasentropy import (
    core,
    entropies,
    husimi,
    majorization,
    spectra,
    symfun,
)

# -----------------------------------------------------------------------------
# States and spectra
# -----------------------------------------------------------------------------
from phasentropy.spectra import (
    BipartitePureState,
    HermitianState,
    Spectrum,
    eigen_spectrum,
    random_density,
    random_pure_bipartite,
    random_spectrum,
    schmidt_spectrum,
)

# -----------------------------------------------------------------------------
# Spectral kernel
# -----------------------------------------------------------------------------
from phasentropy.symfun import McEstimate, log_mu, mu, mu_simplex_oracle

# -----------------------------------------------------------------------------
# Entropies
# -----------------------------------------------------------------------------
from phasentropy.entropies import (
    EntropyReport,
    c_n,
    c_nq,
    entropy_excess,
    husimi_moment,
    q_scan,
    renyi_entropy,
    renyi_subentropy,
    renyi_wehrl,
    rescaled_moment,
    subentropy,
    von_neumann,
    wehrl_entropy_bi,
    wehrl_entropy_mono,
)

# -----------------------------------------------------------------------------
# Phase space and majorization
# -----------------------------------------------------------------------------
from phasentropy.husimi import (
    CoherentPoint,
    coherent_state,
    husimi_bi,
    husimi_mono,
    mc_moment_bi,
    mc_moment_mono,
    mc_wehrl,
    sample_fubini_study,
)
from phasentropy.majorization import (
    MajorizationPair,
    SchurReport,
    majorizes,
    random_majorized_pair,
    schur_concavity_suite,
)

# -----------------------------------------------------------------------------
# Public API
# -----------------------------------------------------------------------------
__all__ = [
    # version
    "__version__",
    # namespaces
    "core",
    "entropies",
    "husimi",
    "majorization",
    "spectra",
    "symfun",
    # states and spectra
    "BipartitePureState",
    "HermitianState",
    "Spectrum",
    "eigen_spectrum",
    "random_density",
    "random_pure_bipartite",
    "random_spectrum",
    "schmidt_spectrum",
    # spectral kernel
    "McEstimate",
    "log_mu",
    "mu",
    "mu_simplex_oracle",
    # entropies
    "EntropyReport",
    "c_n",
    "c_nq",
    "entropy_excess",
    "husimi_moment",
    "q_scan",
    "renyi_entropy",
    "renyi_subentropy",
    "renyi_wehrl",
    "rescaled_moment",
    "subentropy",
    "von_neumann",
    "wehrl_entropy_bi",
    "wehrl_entropy_mono",
    # phase space
    "CoherentPoint",
    "coherent_state",
    "husimi_bi",
    "husimi_mono",
    "mc_moment_bi",
    "mc_moment_mono",
    "mc_wehrl",
    "sample_fubini_study",
    # majorization
    "MajorizationPair",
    "SchurReport",
    "majorizes",
    "random_majorized_pair",
    "schur_concavity_suite",
]
