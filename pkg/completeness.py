"""
Completeness of the invariant set under qubit permutations
Each transposition (1,i) maps every D_n^j to some +-D_n^m; the action is
recovered by probing random exact states and regenerated as tables
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import config
from invariants import all_invariants
from partition import Transposition, enumerate_partitions, locate_row_split, partition_count
from qstate import PureState, QubitPermutation, check_qubit_count, permute_by_word, random_state

logger = logging.getLogger(__name__)

Candidate = Tuple[int, int]  # (target index, sign)


class CompletenessError(RuntimeError):
    """The probed action is not a signed permutation of the invariant set"""


class AmbiguousMatchError(CompletenessError):
    """Several (index, sign) candidates survive every probe; raise the probe count"""


class NoMatchError(CompletenessError):
    """An image matches no invariant at all"""


# ═══════════════════════════════════════════════════════════════════
# 📦 DATA CLASSES
# ═══════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class ActionRow:
    """Image of every D_n^j under one word: D_n^j(word psi) = signs[j] * D_n^targets[j](psi)"""
    word: Tuple[Transposition, ...]
    targets: Tuple[int, ...]
    signs: Tuple[int, ...]
    probes_used: int

    @property
    def label(self) -> str:
        return ''.join(f"({a},{b})" for a, b in self.word) or 'I'

    def is_bijective(self) -> bool:
        return sorted(self.targets) == list(range(1, len(self.targets) + 1))


@dataclass(frozen=True)
class ActionTable:
    n: int
    rows: Tuple[ActionRow, ...]
    probes: int
    seed: int

    @property
    def probes_used(self) -> int:
        return max((row.probes_used for row in self.rows), default=0)

    def row(self, i: int) -> ActionRow:
        """Row of the transposition (1,i)"""
        return self.rows[i - 1]

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'probes': self.probes,
            'probes_used': self.probes_used,
            'seed': self.seed,
            'rows': [
                {'i': row.word[-1][1], 'targets': list(row.targets), 'signs': list(row.signs)}
                for row in self.rows
            ],
        }


# ═══════════════════════════════════════════════════════════════════
# 🔍 PROBING
# ═══════════════════════════════════════════════════════════════════

def probe_state(n: int, probe: int, seed: int) -> PureState:
    return random_state(n, config.EXACT_MODE, seed=[seed, probe])


def _matches(image, base_values) -> Set[Candidate]:
    found = set()
    for m, value in enumerate(base_values, 1):
        if image == value:
            found.add((m, 1))
        if image == -value:
            found.add((m, -1))
    return found


def _resolve(n: int, word: Sequence[Transposition], probes: int, seed: int,
             base_cache: Optional[Dict[int, list]] = None) -> ActionRow:
    c = partition_count(n)
    candidates: List[Optional[Set[Candidate]]] = [None] * c
    used = 0

    for probe in range(probes):
        psi = probe_state(n, probe, seed)
        if base_cache is not None and probe in base_cache:
            base = base_cache[probe]
        else:
            base = [v.value for v in all_invariants(psi, config.EXACT_MODE).values]
            if base_cache is not None:
                base_cache[probe] = base
        images = [v.value for v in all_invariants(permute_by_word(psi, word), config.EXACT_MODE).values]
        used = probe + 1

        for j, image in enumerate(images):
            found = _matches(image, base)
            candidates[j] = found if candidates[j] is None else candidates[j] & found
            if not candidates[j]:
                raise NoMatchError(f"D_{n}^{j + 1} under {list(word)} matches no invariant (probe {probe})")

        if all(len(found) == 1 for found in candidates):
            break
    else:
        ambiguous = [j + 1 for j, found in enumerate(candidates) if len(found) > 1]
        raise AmbiguousMatchError(
            f"Invariants {ambiguous} under {list(word)} still ambiguous after {probes} probes"
        )

    resolved = [next(iter(found)) for found in candidates]
    return ActionRow(tuple(word), tuple(m for m, _ in resolved), tuple(s for _, s in resolved), used)


def permutation_action(n: int, word: Sequence[Transposition], probes: Optional[int] = None,
                       seed: int = config.DEFAULT_SEED) -> ActionRow:
    """Probed action of a word of transpositions applied to states left to right"""
    n = check_qubit_count(n, config.EXACT_MODE)
    probes = config.DEFAULT_PROBES if probes is None else probes
    if probes < 1:
        raise ValueError(f"At least one probe is needed, got {probes}")
    return _resolve(n, tuple(word), probes, seed)


def transposition_action(n: int, i: int, probes: Optional[int] = None,
                         seed: int = config.DEFAULT_SEED) -> ActionRow:
    if not 1 <= i <= n:
        raise ValueError(f"Transposition (1,{i}) is outside 1..{n}")
    return permutation_action(n, ((1, i),), probes, seed)


def predicted_action(n: int, word: Sequence[Transposition]) -> Tuple[int, ...]:
    """Targets obtained by carrying each partition's row bits through the word"""
    pi = QubitPermutation.from_word(n, word)
    targets = []
    for p in enumerate_partitions(n):
        # D^j(pi psi) reads psi's bits at pi^-1 of the row bits
        image, _ = locate_row_split(n, pi.inverse().apply_to_set(p.row_bits))
        targets.append(image.canonical_index)
    return tuple(targets)


# ═══════════════════════════════════════════════════════════════════
# 📋 TABLES
# ═══════════════════════════════════════════════════════════════════

def completeness_table(n: int, probes: Optional[int] = None, seed: int = config.DEFAULT_SEED,
                       workers: Optional[int] = None) -> ActionTable:
    """Rows for (1,1) ... (1,n); raises CompletenessError if a row is not a bijection"""
    n = check_qubit_count(n, config.EXACT_MODE)
    probes = config.DEFAULT_PROBES if probes is None else probes
    workers = config.MAX_WORKERS if workers is None else workers

    def build_row(i: int) -> ActionRow:
        try:
            return _resolve(n, ((1, i),), probes, seed, base_cache)
        except AmbiguousMatchError:
            escalated = max(probes, config.ESCALATED_PROBES)
            if escalated == probes:
                raise
            logger.warning(f"Row (1,{i}) ambiguous with {probes} probes, retrying with {escalated}")
            return _resolve(n, ((1, i),), escalated, seed, base_cache)

    base_cache: Dict[int, list] = {}
    if workers <= 1:
        rows = [build_row(i) for i in range(1, n + 1)]
    else:
        # probe 0 is shared by every row; fill it before fanning out
        base_cache[0] = [v.value for v in all_invariants(probe_state(n, 0, seed), config.EXACT_MODE).values]
        slots: List[Optional[ActionRow]] = [None] * n
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(build_row, i): i for i in range(1, n + 1)}
            for future in as_completed(futures):
                slots[futures[future] - 1] = future.result()
        rows = slots

    for row in rows:
        if not row.is_bijective():
            raise CompletenessError(f"Row {row.label} maps onto {sorted(set(row.targets))}, not a bijection")

    table = ActionTable(n, tuple(rows), probes, seed)
    logger.info(f"Completeness table for n={n}: {n} rows, up to {table.probes_used} probes per row")
    return table
