"""
Configuration file for the Gotzmann monomial toolkit.
Contains all default parameters for enumeration, classification, and verification sweeps.
"""

# Enumeration limits
DEFAULT_ENUMERATION_CAP = 5_000_000  # Largest monomial set any operation may materialize
BOREL_SIZE_CACHE_SIZE = 65_536       # Memoised |B(u)| entries kept per process
U64_MAX = 2**64 - 1                  # Exponents, degrees and counts must stay below this

# Classification
DEFAULT_CLASSIFIER_METHOD = "auto"   # "auto", "oracle" or "closed_form"
CLASSIFIER_METHODS = ["auto", "oracle", "closed_form"]
DEFAULT_PADDING_CAP = 64             # Largest power of the last variable tried by minimal_padding
DEFAULT_WITNESS_WALK_BUDGET = 100_000  # Longest predecessor walk for a closed-form cogaps witness
DEFAULT_WITNESS_DEGREE_BUDGET = 256    # Closed-form witnesses are skipped above this inner degree

# Verification sweeps
VERIFY_MODES = ["verify-threshold", "verify-formulas"]
TABLE_MODE = "table"
DEFAULT_WORKERS = 1
DEFAULT_A_RANGE = (0, 1)             # Powers of x1 tried in threshold sweeps
DEFAULT_B_RANGE = (0, 3)
DEFAULT_C_RANGE = (0, 3)
DEFAULT_DEG_RANGE = (0, 4)
DEFAULT_N2_T_RANGE = (0, 6)          # t-range for the two-variable sweep
DEFAULT_N3_MARGIN = 3                # t runs up to C(b,2) + margin for n = 3
DEFAULT_THRESHOLD_MARGIN = 2         # t runs up to threshold + margin for n = 4
DEFAULT_MU_K_MAX = 6                 # Power-drop family: 1 <= k <= K
DEFAULT_MU_R_MAX = 3                 # Two-variable family: r <= R
DEFAULT_MU_S_MAX = 6                 # Two-variable family: s <= S
DEFAULT_FH_MAX = 4                   # f/h audit over b, c, t <= this

# Tables
DEFAULT_TABLE_B_RANGE = (0, 4)
DEFAULT_TABLE_C_RANGE = (0, 3)
DEFAULT_ORACLE_TABLE_RANGE = (0, 2)  # Oracle tables for n >= 5 stay small

# Output
OUTPUT_FORMATS = ["plain", "json", "csv"]
DEFAULT_OUTPUT_FORMAT = "plain"
DEFAULT_OUTPUT_DIR = "output"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
