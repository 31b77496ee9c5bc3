# Numerical tolerances shared by all modules
CLAMP_TOL = 1e-10  # eigenvalues in [-CLAMP_TOL, 0) are set to zero
NEGATIVE_TOL = 1e-12  # spectrum entries in [-NEGATIVE_TOL, 0) are set to zero
SUM_TOL = 1e-10
RENORMALIZE_WARN_TOL = 1e-6
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10
NORM_TOL = 1e-8

# Spectral kernels
EIGENSUM_GAP_TOL = 1e-8
DISPATCH_GAP_RTOL = 1e-3
NODE_MERGE_RTOL = 1e-9
DIVIDED_DIFFERENCE_RTOL = 1e-12  # target accuracy of the Newton table and the eigen-sum
INTEGER_Q_TOL = 1e-12

# Entropies
Q_ONE_TOL = 1e-6
WEHRL_H_RANGE = (1e-6, 1e-3)
DIAGNOSTIC_TOL = 1e-9  # slack for monotone-in-q report columns

# Monte-Carlo
MIN_SAMPLES = 1000
MC_CHUNK_SIZE = 1 << 16
SIGMA_GATE = 4.0
H_FLOOR = 1e-300

# Majorization
SCHUR_SLACK = 1e-12
MAJORIZATION_TOL = 1e-12

# Command-line defaults
DEFAULT_SEED = 20031023
DEFAULT_Q_GRID = (0.5, 1.0, 2.0, 5.0)
DEFAULT_ORACLE_Q = (1.0, 2.0)
DEFAULT_SAMPLES = 100_000
DEFAULT_SCHUR_DIMS = (2, 3, 4, 5)
DEFAULT_SCHUR_Q = (0.5, 2.0, 5.0)
DEFAULT_PAIRS = 1000
CONJECTURE_SPECTRA = 1000
CONJECTURE_DIM = 4
CONJECTURE_Q_RANGE = (0.1, 20.0)
CONJECTURE_Q_POINTS = 50
FIGURE_GRID = 201

# Exit codes
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_ORACLE = 4
EXIT_IO = 5
EXIT_SCHUR = 6
