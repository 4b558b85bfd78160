import os

# degrees and series depth
DEFAULT_N_MAX = 20


def default_order(n_max):
    # t(D) is applied twice in the eigen-equation check, hence the 2x
    return 2 * n_max + 2


# orthogonality / moments
GRAM_TAIL_RATIO = 1e-15
GRAM_OFFDIAG_BOUND = 1e-12
MP_GRAM_TOL = 1e-8
MOMENT_TOL = 1e-10
MAX_DISCRETE_TERMS = 4000
# partial sums without a tail certificate stop here
UNCERTIFIED_TERMS = 200

# Meixner-Pollaczek integrals: composite Gauss-Legendre on unit panels
MP_PANEL_NODES = 20
MP_MIN_CUTOFF = 40.0
MP_TAIL_TARGET = 1e-18

# identities and limits
IDENTITY_TOL = 1e-10
LIMIT_DPS = 60
LIMIT_ZERO_FLOOR = 1e-40
LIMIT_ORDER_SLACK = 0.05
LIMIT_FIT_POINTS = 3

OUT_DIR_ENV = "MEIXNER_OUT_DIR"
LOG_LEVEL_ENV = "MEIXNER_LOG_LEVEL"


def output_dir():
    return os.environ.get(OUT_DIR_ENV)


def log_level():
    return os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
