from phasentropy.symfun.kernels import (
    confluent_divided_difference,
    log_mu,
    matrix_divided_difference,
    mu,
    mu_divided_difference,
    mu_eigensum,
    mu_homogeneous,
)
from phasentropy.symfun.montecarlo import McEstimate
from phasentropy.symfun.oracle import mu_simplex_oracle

__all__ = [
    "McEstimate",
    "confluent_divided_difference",
    "log_mu",
    "matrix_divided_difference",
    "mu",
    "mu_divided_difference",
    "mu_eigensum",
    "mu_homogeneous",
    "mu_simplex_oracle",
]
