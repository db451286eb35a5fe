"""Configuration package for the theoria engine"""

from .settings import (
    # Oracle settings
    DEFAULT_ORACLE_DEPTH,
    MAX_ORACLE_DEPTH,
    GALLERY_ORACLE_DEPTH,

    # Guards
    ENUMERATION_CAP_BITS,
    WITNESS_SAMPLE,
    CB_MAX_STEPS,
    LATTICE_ELEMENT_CAP,
    ALGEBRA_GENERATOR_CAP,

    # Verify suites
    VERIFY_SUITES,
    VERIFY_HISTORY_FILE,

    # Display and exit status
    TABLE_WIDTH,
    EXIT_OK,
    EXIT_VIOLATION,
    EXIT_USAGE,
)

__version__ = "1.0.0"
