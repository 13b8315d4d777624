"""
Configuration file for the SLOCC determinant invariant toolkit
Contains arithmetic modes, size limits, zero thresholds and sampling parameters
"""

import os
from pathlib import Path

# ═══════════════════════════════════════════════════════════════════
# 🧮 ARITHMETIC MODES
# ═══════════════════════════════════════════════════════════════════

EXACT_MODE = 'exact'   # Gaussian rationals, zero test is exact
FLOAT_MODE = 'float'   # complex128, zero test against a Hadamard bound
MODES = (EXACT_MODE, FLOAT_MODE)

# Largest qubit count accepted per mode (--max-n on the CLI overrides both)
MAX_QUBITS_EXACT = int(os.environ.get('SLOCC_MAX_QUBITS_EXACT', 8))
MAX_QUBITS_FLOAT = int(os.environ.get('SLOCC_MAX_QUBITS_FLOAT', 12))

# ═══════════════════════════════════════════════════════════════════
# 🎯 ZERO TESTING AND TOLERANCES
# ═══════════════════════════════════════════════════════════════════

# Float determinants are zero when |det| <= factor * Hadamard bound
ZERO_THRESHOLD_FACTOR = float(os.environ.get('SLOCC_ZERO_FACTOR', 1e-9))

# Relative error accepted by the float SLOCC equation check
SLOCC_REL_TOLERANCE = 1e-8

# A float operator chain counts as invertible when every |det A_i| exceeds this
OPERATOR_DET_ZERO = 1e-12

# ═══════════════════════════════════════════════════════════════════
# 🎲 RANDOM SAMPLING
# ═══════════════════════════════════════════════════════════════════

# Exact draws use Gaussian integers with parts in [-RANDOM_INT_BOUND, RANDOM_INT_BOUND]
RANDOM_INT_BOUND = 9

# Float operator draws are rejected while |det| < FLOAT_MIN_OPERATOR_DET
FLOAT_MIN_OPERATOR_DET = 0.1

# Rejection loop bound for invertible operator draws
MAX_REDRAWS = 1000

DEFAULT_SEED = 0

# ═══════════════════════════════════════════════════════════════════
# 🔁 COMPLETENESS PROBING
# ═══════════════════════════════════════════════════════════════════

DEFAULT_PROBES = 3
ESCALATED_PROBES = 8  # retried once when DEFAULT_PROBES leaves a match ambiguous

# Thread pool width for invariant evaluation and table rows (1 = sequential)
MAX_WORKERS = int(os.environ.get('SLOCC_WORKERS', 1))

# ═══════════════════════════════════════════════════════════════════
# 📁 PATHS AND FILE FORMATS
# ═══════════════════════════════════════════════════════════════════

BASE_DIR = Path(__file__).parent
DATA_DIR = BASE_DIR / 'data'
STATE_DIR = DATA_DIR / 'states'
EXPORT_DIR = DATA_DIR / 'exports'

STATE_FILE_HEADER = '# slocc-state v1'
STATE_FILE_SUFFIX = '.state'

EXPORT_FORMATS = ['json', 'csv', 'markdown']

# ═══════════════════════════════════════════════════════════════════
# 📝 LOGGING
# ═══════════════════════════════════════════════════════════════════

LOG_LEVEL = os.environ.get('SLOCC_LOG_LEVEL', 'WARNING').upper()


def max_qubits(mode: str) -> int:
    """Configured qubit limit for an arithmetic mode"""
    return MAX_QUBITS_EXACT if mode == EXACT_MODE else MAX_QUBITS_FLOAT
