"""
Row/column bit partitions behind the determinant invariants

A partition keeps bit n/2 among the row bits, swaps the column bits R taken
from {1..n/2-1} for the row bits T taken from {n/2+1..n}, and is reached from
the base split by sigma = (r1,t1)...(rk,tk), or in normal form
(1,r1)(1,t1)...(1,rk)(1,tk).
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import FrozenSet, List, Sequence, Tuple

from qstate import QubitCountError, QubitPermutation, StateError

logger = logging.getLogger(__name__)

Transposition = Tuple[int, int]

_CYCLE = re.compile(r'\((\d+),(\d+)\)')


def _check_even(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2 or n % 2:
        raise QubitCountError(f"Partitions exist for even n >= 2 only, got {n!r}")
    return n


# ═══════════════════════════════════════════════════════════════════
# 📦 DATA CLASSES
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class BitPartition:
    """Choice of n/2 row bits (always containing bit n/2) and the complementary column bits"""
    n: int
    k: int
    r_bits: Tuple[int, ...]
    t_bits: Tuple[int, ...]
    canonical_index: int
    row_bits: Tuple[int, ...] = field(init=False)
    col_bits: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        half = self.n // 2
        rows = (set(range(1, half + 1)) - set(self.r_bits)) | set(self.t_bits)
        object.__setattr__(self, 'row_bits', tuple(sorted(rows)))
        object.__setattr__(self, 'col_bits', tuple(b for b in range(1, self.n + 1) if b not in rows))

    @property
    def split_key(self) -> FrozenSet[FrozenSet[int]]:
        """Unordered {row_bits, col_bits}; a partition and its transpose share it"""
        return frozenset({frozenset(self.row_bits), frozenset(self.col_bits)})

    def to_dict(self) -> dict:
        return {
            'index': self.canonical_index,
            'sigma': sigma_of_partition(self).cycle_string(),
            'row_bits': list(self.row_bits),
            'col_bits': list(self.col_bits),
        }


@dataclass(frozen=True)
class SigmaPermutation:
    """sigma in pair form and in (1,i) normal form with (1,1) dropped"""
    n: int
    pairs: Tuple[Transposition, ...]
    normal_form: Tuple[Transposition, ...]

    @property
    def permutation(self) -> QubitPermutation:
        return QubitPermutation.from_word(self.n, self.pairs)

    def cycle_string(self) -> str:
        return render_cycle_string(self.normal_form)

    def pair_string(self) -> str:
        return render_cycle_string(self.pairs)


# ═══════════════════════════════════════════════════════════════════
# 🔢 COUNTING AND ENUMERATION
# ═══════════════════════════════════════════════════════════════════

def partition_count(n: int) -> int:
    """C(n-1, n/2-1)"""
    n = _check_even(n)
    return comb(n - 1, n // 2 - 1)


def partition_count_by_k(n: int) -> int:
    """Sum over k of C(n/2-1, k) * C(n/2, k); always equals partition_count(n)"""
    n = _check_even(n)
    half = n // 2
    return sum(comb(half - 1, k) * comb(half, k) for k in range(half))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[BitPartition, ...]:
    """All partitions ordered by k, then R, then T lexicographically"""
    n = _check_even(n)
    half = n // 2
    partitions: List[BitPartition] = []
    for k in range(half):
        for r_bits in combinations(range(1, half), k):
            for t_bits in combinations(range(half + 1, n + 1), k):
                partitions.append(BitPartition(n, k, r_bits, t_bits, len(partitions) + 1))
    logger.info(f"Enumerated {len(partitions)} bit partitions for n={n}")
    return tuple(partitions)


def sigma_of_partition(p: BitPartition) -> SigmaPermutation:
    pairs = tuple(zip(p.r_bits, p.t_bits))
    normal: List[Transposition] = []
    for r, t in pairs:
        if r != 1:
            normal.append((1, r))
        normal.append((1, t))
    return SigmaPermutation(p.n, pairs, tuple(normal))


def all_row_splits(n: int) -> List[Tuple[int, ...]]:
    """Every choice of n/2 row bits, C(n, n/2) of them"""
    n = _check_even(n)
    return list(combinations(range(1, n + 1), n // 2))


def locate_row_split(n: int, row_bits) -> Tuple[BitPartition, bool]:
    """Canonical partition with these row bits, or whose column bits they are (transposed=True)"""
    wanted = frozenset(row_bits)
    for p in enumerate_partitions(n):
        if wanted == frozenset(p.row_bits):
            return p, False
        if wanted == frozenset(p.col_bits):
            return p, True
    raise StateError(f"{sorted(wanted)} is not a split of {n} bits into halves")


# ═══════════════════════════════════════════════════════════════════
# 🔁 TRANSPOSITION WORDS
# ═══════════════════════════════════════════════════════════════════

def word_row_set(word: Sequence[Transposition], n: int) -> FrozenSet[int]:
    """
    Row bits of the determinant obtained by letting word act on D_n^1

    The rightmost transposition moves the row set first, which is the
    left-to-right order in which the word acts on a state.
    """
    rows = frozenset(range(1, n // 2 + 1))
    for a, b in reversed(list(word)):
        rows = QubitPermutation.transposition(n, a, b).apply_to_set(rows)
    return rows


def render_cycle_string(word: Sequence[Transposition]) -> str:
    """'(1,2)(1,4)' for a word, 'I' for the empty word; (a,a) factors are dropped"""
    text = ''.join(f"({a},{b})" for a, b in word if a != b)
    return text or 'I'


def parse_cycle_string(text: str) -> Tuple[Transposition, ...]:
    text = text.strip()
    if text == 'I':
        return ()
    word = tuple((int(a), int(b)) for a, b in _CYCLE.findall(text))
    if not word or ''.join(f"({a},{b})" for a, b in word) != text.replace(' ', ''):
        raise StateError(f"Malformed transposition word '{text}'")
    return word
