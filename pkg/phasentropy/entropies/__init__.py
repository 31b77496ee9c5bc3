from phasentropy.entropies.constants import (
    c_n,
    c_nq,
    max_renyi_subentropy,
    moment_prefactor,
    printed_max_renyi_subentropy,
)
from phasentropy.entropies.monotones import (
    entropy_excess,
    husimi_moment,
    renyi_entropy,
    renyi_subentropy,
    renyi_wehrl,
    rescaled_moment,
    subentropy,
    von_neumann,
    wehrl_entropy,
    wehrl_entropy_bi,
    wehrl_entropy_mono,
    wehrl_via_q_limit,
)
from phasentropy.entropies.report import (
    ConjectureReport,
    EntropyReport,
    conjecture_diagnostics,
    q_scan,
)

__all__ = [
    "ConjectureReport",
    "EntropyReport",
    "c_n",
    "c_nq",
    "conjecture_diagnostics",
    "entropy_excess",
    "husimi_moment",
    "max_renyi_subentropy",
    "moment_prefactor",
    "printed_max_renyi_subentropy",
    "q_scan",
    "renyi_entropy",
    "renyi_subentropy",
    "renyi_wehrl",
    "rescaled_moment",
    "subentropy",
    "von_neumann",
    "wehrl_entropy",
    "wehrl_entropy_bi",
    "wehrl_entropy_mono",
    "wehrl_via_q_limit",
]
