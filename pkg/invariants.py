"""
SLOCC determinant invariants D_n^1 ... D_n^c
Invariant vectors, zero-pattern families, the determinant equation check and
the inequivalence test built on it
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import List, Optional, Tuple

import config
from detengine import DetValue, build_matrix, determinant
from partition import BitPartition, enumerate_partitions, partition_count, sigma_of_partition
from qstate import (
    NonInvertibleError, OperatorChain, PureState, SizeMismatchError,
    apply_local_ops, check_qubit_count, permute_by_word,
)

logger = logging.getLogger(__name__)

INEQUIVALENT = 'INEQUIVALENT'
UNDECIDED = 'UNDECIDED'


# ═══════════════════════════════════════════════════════════════════
# 📦 DATA CLASSES
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Signature:
    """Zero pattern (delta_1 ... delta_c); delta_i is bit i-1 of family_id"""
    delta: Tuple[int, ...]
    family_id: int

    @classmethod
    def from_values(cls, values: List[DetValue]) -> 'Signature':
        delta = tuple(0 if v.zero_verdict else 1 for v in values)
        family_id = sum(bit << i for i, bit in enumerate(delta))
        return cls(delta, family_id)

    @property
    def delta_string(self) -> str:
        """delta_1 first"""
        return ''.join(str(bit) for bit in self.delta)


@dataclass(frozen=True)
class InvariantVector:
    """Values of all invariants of one state in canonical partition order"""
    n: int
    mode: str
    values: Tuple[DetValue, ...]

    @property
    def c(self) -> int:
        return len(self.values)

    @property
    def partitions(self) -> Tuple[BitPartition, ...]:
        return enumerate_partitions(self.n)

    def entry(self, index: int) -> DetValue:
        """1-based access matching D_n^index"""
        return self.values[index - 1]

    def signature(self) -> Signature:
        return Signature.from_values(list(self.values))


@dataclass(frozen=True)
class SloccCheckEntry:
    index: int
    left: object
    right: object
    passed: bool
    relative_error: Optional[float] = None


@dataclass(frozen=True)
class SloccCheckReport:
    """sigma det M(a,n) against sigma det M(b,n) * (det A_1 ... det A_n)^(2^((n-2)/2))"""
    n: int
    mode: str
    exponent: int
    det_product: object
    entries: Tuple[SloccCheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def max_relative_error(self) -> Optional[float]:
        """None in exact mode; pairs judged zero on both sides carry no error"""
        if self.mode == config.EXACT_MODE:
            return None
        return max((e.relative_error for e in self.entries if e.relative_error is not None), default=0.0)


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: str
    witnesses: Tuple[int, ...]
    signature_a: Signature
    signature_b: Signature

    @property
    def inequivalent(self) -> bool:
        return self.verdict == INEQUIVALENT


# ═══════════════════════════════════════════════════════════════════
# 🧮 EVALUATION
# ═══════════════════════════════════════════════════════════════════

def _prepare(state: PureState, mode: Optional[str]) -> PureState:
    state = state.in_mode(mode)
    check_qubit_count(state.n, state.mode)
    return state


def evaluate_invariant(state: PureState, p: BitPartition, zero_factor: Optional[float] = None) -> DetValue:
    return determinant(build_matrix(state, p), zero_factor)


def all_invariants(state: PureState, mode: Optional[str] = None, zero_factor: Optional[float] = None,
                   workers: Optional[int] = None) -> InvariantVector:
    """
    Evaluate D_n^1 ... D_n^c

    Args:
        state: even-n state
        mode: None keeps the state's mode; exact states may be evaluated in float
        zero_factor: float-mode zero threshold factor
        workers: thread pool width; results keep canonical order either way
    """
    state = _prepare(state, mode)
    partitions = enumerate_partitions(state.n)
    workers = config.MAX_WORKERS if workers is None else workers

    if workers <= 1:
        values = [evaluate_invariant(state, p, zero_factor) for p in partitions]
    else:
        slots: List[Optional[DetValue]] = [None] * len(partitions)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(evaluate_invariant, state, p, zero_factor): i
                       for i, p in enumerate(partitions)}
            for future in as_completed(futures):
                slots[futures[future]] = future.result()
        values = slots

    logger.info(f"Evaluated {len(values)} invariants of a {state.n}-qubit state ({state.mode} mode)")
    return InvariantVector(state.n, state.mode, tuple(values))


def signature(state: PureState, mode: Optional[str] = None, zero_factor: Optional[float] = None) -> Signature:
    return all_invariants(state, mode, zero_factor).signature()


def family_count(n: int) -> int:
    """2^c families cut out by the c invariants"""
    return 2 ** partition_count(n)


def sigma_determinant(state: PureState, p: BitPartition, mode: Optional[str] = None,
                      zero_factor: Optional[float] = None) -> DetValue:
    """det M of the sigma-permuted state under the base split; equals the invariant of p up to sign"""
    state = _prepare(state, mode)
    moved = permute_by_word(state, sigma_of_partition(p).normal_form)
    return evaluate_invariant(moved, enumerate_partitions(state.n)[0], zero_factor)


# ═══════════════════════════════════════════════════════════════════
# ✅ SLOCC DETERMINANT EQUATION
# ═══════════════════════════════════════════════════════════════════

def slocc_exponent(n: int) -> int:
    return 2 ** ((n - 2) // 2)


def _power_by_squaring(value, n: int):
    """value ** 2^((n-2)/2) by repeated squaring"""
    for _ in range((n - 2) // 2):
        value = value * value
    return value


def _relative_error(left: complex, right: complex) -> float:
    scale = max(abs(left), abs(right))
    if scale == 0:
        return 0.0
    return abs(left - right) / scale


def verify_slocc_equation(psi: PureState, chain: OperatorChain, mode: Optional[str] = None,
                          zero_factor: Optional[float] = None) -> SloccCheckReport:
    """Check every invariant of A_1 x ... x A_n |psi> against the scaled invariant of psi"""
    psi = _prepare(psi, mode)
    if chain.n != psi.n:
        raise SizeMismatchError(f"Chain of {chain.n} operators cannot act on {psi.n} qubits")
    if not chain.is_invertible():
        raise NonInvertibleError("Operator chain contains a non-invertible local operator")

    psi_prime = apply_local_ops(psi, chain)
    left = all_invariants(psi_prime, zero_factor=zero_factor)
    right = all_invariants(psi, zero_factor=zero_factor)
    det_product = chain.det_product()
    factor = _power_by_squaring(det_product, psi.n)
    exact = psi.mode == config.EXACT_MODE

    entries = []
    for index, (lhs, rhs) in enumerate(zip(left.values, right.values), 1):
        scaled = rhs.value * factor
        if exact:
            entries.append(SloccCheckEntry(index, lhs.value, scaled, lhs.value == scaled))
        elif lhs.zero_verdict and rhs.zero_verdict:
            entries.append(SloccCheckEntry(index, lhs.value, scaled, True))
        else:
            error = _relative_error(lhs.value, scaled)
            entries.append(SloccCheckEntry(index, lhs.value, scaled, error <= config.SLOCC_REL_TOLERANCE, error))

    report = SloccCheckReport(psi.n, psi.mode, slocc_exponent(psi.n), det_product, tuple(entries))
    if not report.passed:
        logger.warning(f"SLOCC equation failed for {sum(not e.passed for e in entries)} of {len(entries)} invariants")
    return report


# ═══════════════════════════════════════════════════════════════════
# ⚖️ INEQUIVALENCE
# ═══════════════════════════════════════════════════════════════════

def inequivalence_check(a: PureState, b: PureState, mode: Optional[str] = None,
                        zero_factor: Optional[float] = None) -> EquivalenceVerdict:
    """
    INEQUIVALENT with the differing invariant indices, or UNDECIDED

    Matching zero patterns prove nothing, so there is no EQUIVALENT verdict.
    """
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compare a {a.n}-qubit state with a {b.n}-qubit state")
    if mode is None and a.mode != b.mode:
        mode = config.FLOAT_MODE
    sig_a = signature(a, mode, zero_factor)
    sig_b = signature(b, mode, zero_factor)
    witnesses = tuple(i for i, (x, y) in enumerate(zip(sig_a.delta, sig_b.delta), 1) if x != y)
    verdict = INEQUIVALENT if witnesses else UNDECIDED
    return EquivalenceVerdict(verdict, witnesses, sig_a, sig_b)
