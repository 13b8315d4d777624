"""
Coefficient matrices and their determinants
Exact fraction-free (Bareiss) elimination over Gaussian rationals and float LU
with partial pivoting, each with a zero verdict
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Optional, Tuple

import numpy as np

import config
from partition import BitPartition
from qstate import ModeMismatchError, PureState, SizeMismatchError
from scalars import GaussRational

logger = logging.getLogger(__name__)

GaussInt = Tuple[int, int]


class NonFiniteMatrixError(ValueError):
    """Float matrix with NaN or infinite entries"""


# ═══════════════════════════════════════════════════════════════════
# 📦 DATA CLASSES
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class CoeffMatrix:
    """2^(n/2) x 2^(n/2) arrangement of a state's amplitudes under one partition"""
    entries: np.ndarray
    mode: str
    partition_index: int = 0
    state_label: str = ''

    @property
    def d(self) -> int:
        return self.entries.shape[0]

    def transpose(self) -> 'CoeffMatrix':
        return CoeffMatrix(self.entries.T.copy(), self.mode, self.partition_index, self.state_label)

    def swap_rows(self, i: int, j: int) -> 'CoeffMatrix':
        entries = self.entries.copy()
        entries[[i, j]] = entries[[j, i]]
        return CoeffMatrix(entries, self.mode, self.partition_index, self.state_label)


@dataclass(frozen=True)
class DetValue:
    """Determinant with its zero verdict; zero_bound is the float threshold (None when exact)"""
    value: object
    zero_verdict: bool
    zero_bound: Optional[float] = None


# ═══════════════════════════════════════════════════════════════════
# 🧩 MATRIX LAYOUT
# ═══════════════════════════════════════════════════════════════════

def _bit_weights(bits: Tuple[int, ...], n: int) -> np.ndarray:
    """Amplitude-index contribution of each row (or column) number; first listed bit is most significant"""
    h = len(bits)
    numbers = np.arange(2 ** h)
    weights = np.zeros(2 ** h, dtype=np.int64)
    for position, bit in enumerate(bits):
        weights += ((numbers >> (h - 1 - position)) & 1) << (n - bit)
    return weights


@lru_cache(maxsize=None)
def _cached_grid(n: int, row_bits: Tuple[int, ...], col_bits: Tuple[int, ...]) -> np.ndarray:
    grid = _bit_weights(row_bits, n)[:, None] + _bit_weights(col_bits, n)[None, :]
    grid.flags.writeable = False
    return grid


def index_grid(p: BitPartition) -> np.ndarray:
    """d x d array of amplitude indices: grid[row, col] is the index placed there"""
    return _cached_grid(p.n, p.row_bits, p.col_bits)


def build_matrix(state: PureState, p: BitPartition, state_label: str = '') -> CoeffMatrix:
    if p.n != state.n:
        raise SizeMismatchError(f"Partition for n={p.n} cannot lay out a {state.n}-qubit state")
    entries = np.asarray(state.amplitudes)[index_grid(p)]
    return CoeffMatrix(entries, state.mode, p.canonical_index, state_label)


# ═══════════════════════════════════════════════════════════════════
# 🎯 EXACT ENGINE
# ═══════════════════════════════════════════════════════════════════

def _gmul(a: GaussInt, b: GaussInt) -> GaussInt:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _gsub(a: GaussInt, b: GaussInt) -> GaussInt:
    return a[0] - b[0], a[1] - b[1]


def _gdiv_exact(a: GaussInt, b: GaussInt) -> GaussInt:
    """a / b for Gaussian integers known to divide exactly"""
    norm = b[0] * b[0] + b[1] * b[1]
    re_part = a[0] * b[0] + a[1] * b[1]
    im_part = a[1] * b[0] - a[0] * b[1]
    return re_part // norm, im_part // norm


def _integer_rows(entries: np.ndarray) -> Tuple[List[List[GaussInt]], int]:
    """Scale every row to Gaussian integers; returns the rows and the product of row scales"""
    rows, scale = [], 1
    for row in entries:
        row_lcm = 1
        for value in row:
            row_lcm = lcm(row_lcm, value.re.denominator, value.im.denominator)
        rows.append([(int(value.re * row_lcm), int(value.im * row_lcm)) for value in row])
        scale *= row_lcm
    return rows, scale


def bareiss_determinant(rows: List[List[GaussInt]]) -> GaussInt:
    """Fraction-free elimination over Z[i]; every division is exact"""
    a = [list(row) for row in rows]
    d = len(a)
    if d == 0:
        return 1, 0
    sign, previous = 1, (1, 0)
    for k in range(d - 1):
        if a[k][k] == (0, 0):
            for i in range(k + 1, d):
                if a[i][k] != (0, 0):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0, 0
        pivot = a[k][k]
        for i in range(k + 1, d):
            factor = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, d):
                row_i[j] = _gdiv_exact(_gsub(_gmul(pivot, row_i[j]), _gmul(factor, row_k[j])), previous)
            row_i[k] = (0, 0)
        previous = pivot
    last = a[d - 1][d - 1]
    return sign * last[0], sign * last[1]


def det_exact(m: CoeffMatrix) -> DetValue:
    if m.mode != config.EXACT_MODE:
        raise ModeMismatchError("det_exact needs an exact-mode matrix")
    rows, scale = _integer_rows(m.entries)
    re_part, im_part = bareiss_determinant(rows)
    value = GaussRational(Fraction(re_part, scale), Fraction(im_part, scale))
    return DetValue(value, zero_verdict=not value)


# ═══════════════════════════════════════════════════════════════════
# 🌊 FLOAT ENGINE
# ═══════════════════════════════════════════════════════════════════

def lu_determinant(a: np.ndarray) -> complex:
    """Determinant from LAPACK's partially pivoted LU (getrf, through slogdet)"""
    phase, log_modulus = np.linalg.slogdet(a)
    if phase == 0:
        return 0j
    return complex(phase * np.exp(log_modulus))


def hadamard_bound(a: np.ndarray) -> float:
    """Product of row Euclidean norms, an upper bound on |det|"""
    return float(np.prod(np.linalg.norm(a, axis=1)))


def det_float(m: CoeffMatrix, zero_factor: Optional[float] = None) -> DetValue:
    zero_factor = config.ZERO_THRESHOLD_FACTOR if zero_factor is None else zero_factor
    if m.mode != config.FLOAT_MODE:
        raise ModeMismatchError("det_float needs a float-mode matrix")
    a = np.asarray(m.entries, dtype=np.complex128)
    if not np.all(np.isfinite(a)):
        raise NonFiniteMatrixError("Matrix contains NaN or infinite entries")

    value = lu_determinant(a)
    bound = hadamard_bound(a)
    zero_bound = zero_factor * bound
    verdict = bound == 0.0 or abs(value) <= zero_bound
    return DetValue(value, zero_verdict=bool(verdict), zero_bound=zero_bound)


def determinant(m: CoeffMatrix, zero_factor: Optional[float] = None) -> DetValue:
    """Dispatch on the matrix mode"""
    if m.mode == config.EXACT_MODE:
        return det_exact(m)
    return det_float(m, zero_factor)
