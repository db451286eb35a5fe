"""Configuration settings for the theoria engine and command-line tools"""

import os

# Oracle Settings
DEFAULT_ORACLE_DEPTH = int(os.environ.get("THEORIA_DEPTH", "12"))
MAX_ORACLE_DEPTH = 24
GALLERY_ORACLE_DEPTH = 12

# Enumeration Guards
ENUMERATION_CAP_BITS = 16  # max free coordinates enumerated when a finite piece is listed
LISTED_MEMBER_CAP = 2 ** ENUMERATION_CAP_BITS  # finite counts beyond this keep masks instead of a member list
WITNESS_SAMPLE = 8  # witnesses reported per infinite block of isolated points
CB_MAX_STEPS = 8

# Lattice Settings
LATTICE_ELEMENT_CAP = 4096
DEFAULT_LATTICE_OPS = ("join", "meet_prime")

# Boolean Algebra Settings
ALGEBRA_GENERATOR_CAP = 16
ALGEBRA_EXHAUSTIVE_LIMIT = 256  # elements; above this pairs are sampled
ALGEBRA_SAMPLED_PAIRS = 10000

# Random Family Defaults
DEFAULT_FAMILY_BUDGET = 3
MAX_RANDOM_WORD = 3  # longest prefix/period drawn for random points and masks
MAX_RANDOM_STRIDE = 3
RANDOM_KINDS = ("fin", "fan", "cube", "array")
RANDOM_ARRAY_ATTEMPTS = 8  # mask redraws before falling back to a fan
DEFAULT_BASE_SEED = 0

# Verify Suites and the seeds each one runs by default
VERIFY_SUITES = {
    'closure': 500,
    'lgs': 200,
    'semilattice': 500,
    'lattice': 20,
    'distributivity': 300,
    'boolean': 20,
    'oracle': 200,
}
VERIFY_PAIR_OFFSET = 1000003  # seed distance between the members of a random pair
VERIFY_LATTICE_CAP = 64
VERIFY_ORACLE_DEPTH = 12
VERIFY_EXHAUSTIVE_DEPTH = 6  # cells compared exhaustively against the oracle per random family

# File Storage Settings
VERIFY_HISTORY_FILE = "data/verify_history.json"
LOGS_DIR = "data/logs"

# Display Settings
TABLE_WIDTH = 100

# Exit Status Contract
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

# Logging Configuration
LOG_LEVEL = os.environ.get("THEORIA_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE = None  # e.g. "data/logs/theoria.log"
