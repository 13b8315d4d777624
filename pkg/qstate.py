"""
Even-n qubit pure states for the SLOCC determinant toolkit
Basis and canonical states, local invertible operators, qubit permutations
and the seeded random generators used by the verification harness
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb, sqrt
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

import config
from scalars import GaussRational, check_mode, one, scalar, to_array, to_float_array, zero

logger = logging.getLogger(__name__)

Seed = Union[int, Sequence[int]]

# |chi> = (|0>+|5>+|18>+|23>+|40>+|45>+|58>-|63>)/sqrt(8)
CHI6_TERMS = {0: 1, 5: 1, 18: 1, 23: 1, 40: 1, 45: 1, 58: 1, 63: -1}

CANONICAL_KINDS = ('ghz', 'w', 'dicke', 'chi6')


# ═══════════════════════════════════════════════════════════════════
# ⚠️ ERRORS
# ═══════════════════════════════════════════════════════════════════

class StateError(ValueError):
    """Base class for invalid states, operators and permutations"""


class StateFormatError(StateError):
    """Malformed amplitude data or state file"""


class QubitCountError(StateError):
    """Odd, too small, or above the configured maximum qubit count"""


class SizeMismatchError(StateError):
    """Two objects that must share n do not"""


class ModeMismatchError(StateError):
    """Exact and float values mixed in one computation"""


class NonInvertibleError(StateError):
    """A local operator with vanishing determinant"""


def check_qubit_count(n: int, mode: Optional[str] = None) -> int:
    """Validate an even qubit count, optionally against the mode's limit"""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise QubitCountError(f"Qubit count must be an integer, got {n!r}")
    n = int(n)
    if n < 2 or n % 2:
        raise QubitCountError(f"Qubit count must be even and at least 2, got {n}")
    if mode is not None and n > config.max_qubits(mode):
        raise QubitCountError(
            f"n={n} exceeds the configured maximum of {config.max_qubits(mode)} qubits for {mode} mode"
        )
    return n


# ═══════════════════════════════════════════════════════════════════
# 📦 DATA CLASSES
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class PureState:
    """Unnormalized n-qubit amplitude vector, bit 1 is the most significant index bit"""
    n: int
    amplitudes: np.ndarray
    mode: str = config.EXACT_MODE

    def __post_init__(self):
        check_mode(self.mode)
        check_qubit_count(self.n, self.mode)
        if len(self.amplitudes) != 2 ** self.n:
            raise StateFormatError(
                f"A {self.n}-qubit state needs {2 ** self.n} amplitudes, got {len(self.amplitudes)}"
            )
        amplitudes = to_array(self.amplitudes, self.mode)
        amplitudes.flags.writeable = False
        object.__setattr__(self, 'amplitudes', amplitudes)

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return (self.n == other.n and self.mode == other.mode
                and list(self.amplitudes) == list(other.amplitudes))

    def __hash__(self):
        return hash((self.n, self.mode, tuple(self.amplitudes)))

    def nonzero_indices(self) -> List[int]:
        return [index for index, value in enumerate(self.amplitudes) if value]

    def scaled(self, factor) -> 'PureState':
        """Multiply every amplitude by a scalar of the same mode"""
        return PureState(self.n, self.amplitudes * factor, self.mode)

    def to_float(self) -> 'PureState':
        return PureState(self.n, to_float_array(self.amplitudes), config.FLOAT_MODE)

    def in_mode(self, mode: Optional[str]) -> 'PureState':
        """Same state in the requested mode; float data never becomes exact"""
        if mode is None or mode == self.mode:
            return self
        if mode == config.FLOAT_MODE:
            return self.to_float()
        raise ModeMismatchError("A float-mode state cannot be evaluated in exact mode")


@dataclass(frozen=True)
class LocalOperator:
    """2x2 matrix [[e00, e01], [e10, e11]] acting on one qubit"""
    e00: object
    e01: object
    e10: object
    e11: object

    @classmethod
    def identity(cls, mode: str = config.EXACT_MODE) -> 'LocalOperator':
        return cls(one(mode), zero(mode), zero(mode), one(mode))

    @classmethod
    def from_rows(cls, rows, mode: str = config.EXACT_MODE) -> 'LocalOperator':
        (a, b), (c, d) = rows
        return cls(*(to_array([a, b, c, d], mode)))

    @property
    def mode(self) -> str:
        return config.EXACT_MODE if isinstance(self.e00, GaussRational) else config.FLOAT_MODE

    def det(self):
        return self.e00 * self.e11 - self.e01 * self.e10

    def compose(self, other: 'LocalOperator') -> 'LocalOperator':
        """Matrix product self @ other (other acts first)"""
        return LocalOperator(
            self.e00 * other.e00 + self.e01 * other.e10,
            self.e00 * other.e01 + self.e01 * other.e11,
            self.e10 * other.e00 + self.e11 * other.e10,
            self.e10 * other.e01 + self.e11 * other.e11,
        )

    def rows(self) -> Tuple[Tuple[object, object], Tuple[object, object]]:
        return (self.e00, self.e01), (self.e10, self.e11)


@dataclass(frozen=True)
class OperatorChain:
    """A_1 x A_2 x ... x A_n, one local operator per qubit"""
    operators: Tuple[LocalOperator, ...]

    def __post_init__(self):
        object.__setattr__(self, 'operators', tuple(self.operators))
        if not self.operators:
            raise SizeMismatchError("An operator chain needs at least one operator")
        modes = {op.mode for op in self.operators}
        if len(modes) > 1:
            raise ModeMismatchError("Operator chain mixes exact and float entries")

    @classmethod
    def identity(cls, n: int, mode: str = config.EXACT_MODE) -> 'OperatorChain':
        return cls(tuple(LocalOperator.identity(mode) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.operators)

    @property
    def mode(self) -> str:
        return self.operators[0].mode

    def determinants(self) -> List[object]:
        return [op.det() for op in self.operators]

    def det_product(self):
        product = one(self.mode)
        for value in self.determinants():
            product = product * value
        return product

    def is_invertible(self) -> bool:
        if self.mode == config.EXACT_MODE:
            return all(bool(d) for d in self.determinants())
        return all(abs(d) > config.OPERATOR_DET_ZERO for d in self.determinants())

    def compose(self, other: 'OperatorChain') -> 'OperatorChain':
        """Per-qubit product A_k @ B_k (other acts first)"""
        if self.n != other.n:
            raise SizeMismatchError(f"Cannot compose chains of length {self.n} and {other.n}")
        return OperatorChain(tuple(a.compose(b) for a, b in zip(self.operators, other.operators)))


@dataclass(frozen=True)
class QubitPermutation:
    """Bijection pi on {1..n}; images[k-1] holds pi(k)"""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise StateError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> 'QubitPermutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> 'QubitPermutation':
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: Sequence[Tuple[int, int]]) -> 'QubitPermutation':
        """Permutation of applying the transpositions of word left to right"""
        result = cls.identity(n)
        for a, b in word:
            result = cls.transposition(n, a, b) * result
        return result

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: 'QubitPermutation') -> 'QubitPermutation':
        """Composition: (self * other)(k) = self(other(k))"""
        if self.n != other.n:
            raise SizeMismatchError(f"Cannot compose permutations of size {self.n} and {other.n}")
        return QubitPermutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> 'QubitPermutation':
        images = [0] * self.n
        for k, image in enumerate(self.images, 1):
            images[image - 1] = k
        return QubitPermutation(tuple(images))

    def apply_to_set(self, bits) -> frozenset:
        return frozenset(self(b) for b in bits)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))


# ═══════════════════════════════════════════════════════════════════
# 🏗️ STATE CONSTRUCTION
# ═══════════════════════════════════════════════════════════════════

def _state_from_terms(n: int, terms: Dict[int, object], mode: str) -> PureState:
    amplitudes = [zero(mode)] * (2 ** n)
    for index, value in terms.items():
        amplitudes[index] = value
    return PureState(n, to_array(amplitudes, mode), mode)


def make_basis_state(n: int, index: int, mode: str = config.EXACT_MODE) -> PureState:
    """Computational basis state |index> of n qubits"""
    n = check_qubit_count(n, mode)
    if not 0 <= index < 2 ** n:
        raise StateFormatError(f"Basis index {index} is outside [0, {2 ** n})")
    return _state_from_terms(n, {index: one(mode)}, mode)


def dicke_indices(n: int, k: int) -> List[int]:
    """Basis indices with exactly k ones among n bits, ascending"""
    indices = []
    for ones in combinations(range(1, n + 1), k):
        indices.append(sum(1 << (n - bit) for bit in ones))
    return sorted(indices)


def parse_kind(text: str) -> Tuple[str, Optional[int]]:
    """'ghz', 'w', 'chi6' or 'dicke:k' -> (kind, k)"""
    kind, _, k_text = text.strip().lower().partition(':')
    if kind not in CANONICAL_KINDS:
        raise StateError(f"Unknown state kind '{text}' (expected ghz, w, dicke:k or chi6)")
    if kind == 'dicke':
        if not k_text.isdigit():
            raise StateError(f"Dicke states need an excitation count, e.g. dicke:2 (got '{text}')")
        return kind, int(k_text)
    if k_text:
        raise StateError(f"State kind '{kind}' takes no parameter")
    return kind, None


def canonical_state(kind: str, n: int, mode: str = config.EXACT_MODE, k: Optional[int] = None) -> PureState:
    """
    GHZ, W, Dicke(k) or the six-qubit chi witness

    Exact mode drops irrational normalizers; float mode normalizes.
    """
    n = check_qubit_count(n, mode)
    exact = mode == config.EXACT_MODE

    if kind == 'ghz':
        weight = one(mode) if exact else complex(1 / sqrt(2))
        return _state_from_terms(n, {0: weight, 2 ** n - 1: weight}, mode)

    if kind == 'w':
        kind, k = 'dicke', 1

    if kind == 'dicke':
        if k is None or not 1 <= k <= n - 1:
            raise StateError(f"Dicke excitation count must lie in [1, {n - 1}], got {k}")
        weight = one(mode) if exact else complex(1 / sqrt(comb(n, k)))
        return _state_from_terms(n, {i: weight for i in dicke_indices(n, k)}, mode)

    if kind == 'chi6':
        if n != 6:
            raise QubitCountError(f"The chi witness state is defined for n=6 only, got n={n}")
        terms = {i: scalar(sign, 0, mode) for i, sign in CHI6_TERMS.items()}
        if not exact:
            terms = {i: value / sqrt(8) for i, value in terms.items()}
        return _state_from_terms(n, terms, mode)

    raise StateError(f"Unknown state kind '{kind}'")


# ═══════════════════════════════════════════════════════════════════
# ⚙️ LOCAL OPERATORS AND PERMUTATIONS
# ═══════════════════════════════════════════════════════════════════

def _contract_qubit(amplitudes: np.ndarray, op: LocalOperator, qubit: int, n: int) -> np.ndarray:
    """Apply op to qubit (1-based, bit 1 most significant) without forming 2^n x 2^n matrices"""
    block = amplitudes.reshape(2 ** (qubit - 1), 2, 2 ** (n - qubit))
    low, high = block[:, 0, :], block[:, 1, :]
    out = np.empty_like(block)
    out[:, 0, :] = low * op.e00 + high * op.e01
    out[:, 1, :] = low * op.e10 + high * op.e11
    return out.reshape(-1)


def apply_local_ops(state: PureState, chain: OperatorChain) -> PureState:
    """(A_1 x ... x A_n)|psi> as n single-qubit contractions"""
    if chain.n != state.n:
        raise SizeMismatchError(f"Chain of {chain.n} operators cannot act on {state.n} qubits")
    if chain.mode != state.mode:
        raise ModeMismatchError(f"Chain is {chain.mode} but state is {state.mode}")

    amplitudes = np.array(state.amplitudes, copy=True)
    for qubit, op in enumerate(chain.operators, 1):
        amplitudes = _contract_qubit(amplitudes, op, qubit, state.n)
    return PureState(state.n, amplitudes, state.mode)


def permute_qubits(state: PureState, pi: QubitPermutation) -> PureState:
    """Move the bit at position k to position pi(k)"""
    if pi.n != state.n:
        raise SizeMismatchError(f"Permutation of {pi.n} positions cannot act on {state.n} qubits")
    if pi.is_identity():
        return state
    tensor = np.asarray(state.amplitudes).reshape([2] * state.n)
    moved = np.moveaxis(tensor, list(range(state.n)), [pi(k) - 1 for k in range(1, state.n + 1)])
    return PureState(state.n, np.ascontiguousarray(moved).reshape(-1), state.mode)


def permute_by_word(state: PureState, word: Sequence[Tuple[int, int]]) -> PureState:
    """Apply transpositions to the state left to right; (1,1) is the identity"""
    return permute_qubits(state, QubitPermutation.from_word(state.n, word))


# ═══════════════════════════════════════════════════════════════════
# 🎲 RANDOM GENERATION
# ═══════════════════════════════════════════════════════════════════

def _draw_scalars(rng: np.random.Generator, count: int, mode: str) -> List[object]:
    if mode == config.EXACT_MODE:
        bound = config.RANDOM_INT_BOUND
        parts = rng.integers(-bound, bound + 1, size=(count, 2))
        return [GaussRational(int(re), int(im)) for re, im in parts]
    parts = rng.uniform(-1.0, 1.0, size=(count, 2))
    return [complex(re, im) for re, im in parts]


def random_state(n: int, mode: str = config.EXACT_MODE, seed: Seed = config.DEFAULT_SEED) -> PureState:
    """Seeded random state; exact draws are Gaussian integers with small parts"""
    check_mode(mode)
    n = check_qubit_count(n, mode)
    rng = np.random.default_rng(seed)
    return PureState(n, to_array(_draw_scalars(rng, 2 ** n, mode), mode), mode)


def random_invertible_chain(n: int, mode: str = config.EXACT_MODE, seed: Seed = config.DEFAULT_SEED) -> OperatorChain:
    """Seeded chain of invertible operators drawn by rejection"""
    check_mode(mode)
    n = check_qubit_count(n)
    rng = np.random.default_rng(seed)
    operators = []
    for qubit in range(1, n + 1):
        for _ in range(config.MAX_REDRAWS):
            op = LocalOperator(*_draw_scalars(rng, 4, mode))
            det = op.det()
            if (mode == config.EXACT_MODE and det) or (mode == config.FLOAT_MODE
                                                       and abs(det) >= config.FLOAT_MIN_OPERATOR_DET):
                operators.append(op)
                break
        else:
            raise NonInvertibleError(
                f"No invertible operator for qubit {qubit} after {config.MAX_REDRAWS} draws"
            )
    return OperatorChain(tuple(operators))
