from phasentropy.majorization.order import (
    MajorizationPair,
    birkhoff_mix,
    majorizes,
    random_majorized_pair,
)
from phasentropy.majorization.suite import (
    SchurReport,
    check_pair,
    schur_concavity_suite,
    standard_monotones,
)

__all__ = [
    "MajorizationPair",
    "SchurReport",
    "birkhoff_mix",
    "check_pair",
    "majorizes",
    "random_majorized_pair",
    "schur_concavity_suite",
    "standard_monotones",
]
