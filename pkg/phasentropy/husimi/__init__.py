from phasentropy.husimi.types import CoherentPoint, StateVector
from phasentropy.husimi.coherent import (
    coherent_state,
    coherent_states,
    husimi_bi,
    husimi_mono,
    sample_fubini_study,
)
from phasentropy.husimi.integrate import (
    IdentityResolution,
    mc_moment_bi,
    mc_moment_mono,
    mc_wehrl,
    resolution_of_identity,
)

__all__ = [
    "CoherentPoint",
    "IdentityResolution",
    "StateVector",
    "coherent_state",
    "coherent_states",
    "husimi_bi",
    "husimi_mono",
    "mc_moment_bi",
    "mc_moment_mono",
    "mc_wehrl",
    "resolution_of_identity",
    "sample_fubini_study",
]
