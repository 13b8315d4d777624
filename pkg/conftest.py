"""
Shared fixtures: canonical states, the printed index grids and a Laplace
expansion determinant used as an independent oracle
"""

from functools import lru_cache

import numpy as np
import pytest

import config
from qstate import canonical_state
from scalars import ZERO


def _grid(text: str) -> np.ndarray:
    return np.array([[int(x) for x in line.split()] for line in text.strip().splitlines()])


M_A4 = _grid("""
 0  1  2  3
 4  5  6  7
 8  9 10 11
12 13 14 15
""")

PRINTED_D4 = {
    1: M_A4,
    2: _grid("""
 0  1  8  9
 2  3 10 11
 4  5 12 13
 6  7 14 15
"""),
    3: _grid("""
 0  2  8 10
 1  3  9 11
 4  6 12 14
 5  7 13 15
"""),
}

PRINTED_D6 = {
    1: np.arange(64).reshape(8, 8),
    2: _grid("""
 0  1  2  3 32 33 34 35
 4  5  6  7 36 37 38 39
 8  9 10 11 40 41 42 43
12 13 14 15 44 45 46 47
16 17 18 19 48 49 50 51
20 21 22 23 52 53 54 55
24 25 26 27 56 57 58 59
28 29 30 31 60 61 62 63
"""),
    3: _grid("""
 0  1  4  5 32 33 36 37
 2  3  6  7 34 35 38 39
 8  9 12 13 40 41 44 45
10 11 14 15 42 43 46 47
16 17 20 21 48 49 52 53
18 19 22 23 50 51 54 55
24 25 28 29 56 57 60 61
26 27 30 31 58 59 62 63
"""),
    4: _grid("""
 0  2  4  6 32 34 36 38
 8 10 12 14 40 42 44 46
 1  3  5  7 33 35 37 39
 9 11 13 15 41 43 45 47
16 18 20 22 48 50 52 54
24 26 28 30 56 58 60 62
17 19 21 23 49 51 53 55
25 27 29 31 57 59 61 63
"""),
    5: _grid("""
 0  1  2  3 16 17 18 19
 4  5  6  7 20 21 22 23
 8  9 10 11 24 25 26 27
12 13 14 15 28 29 30 31
32 33 34 35 48 49 50 51
36 37 38 39 52 53 54 55
40 41 42 43 56 57 58 59
44 45 46 47 60 61 62 63
"""),
    6: _grid("""
 0  2  8 10 32 34 40 42
 1  3  9 11 33 35 41 43
 4  6 12 14 36 38 44 46
 5  7 13 15 37 39 45 47
16 18 24 26 48 50 56 58
17 19 25 27 49 51 57 59
20 22 28 30 52 54 60 62
21 23 29 31 53 55 61 63
"""),
    7: _grid("""
 0  2  4  6 16 18 20 22
 1  3  5  7 17 19 21 23
 8 10 12 14 24 26 28 30
 9 11 13 15 25 27 29 31
32 34 36 38 48 50 52 54
33 35 37 39 49 51 53 55
40 42 44 46 56 58 60 62
41 43 45 47 57 59 61 63
"""),
    8: _grid("""
 0  2  4  6  8 10 12 14
 1  3  5  7  9 11 13 15
16 18 20 22 24 26 28 30
17 19 21 23 25 27 29 31
32 34 36 38 40 42 44 46
33 35 37 39 41 43 45 47
48 50 52 54 56 58 60 62
49 51 53 55 57 59 61 63
"""),
    9: _grid("""
 0  1  4  5  8  9 12 13
 2  3  6  7 10 11 14 15
16 17 20 21 24 25 28 29
18 19 22 23 26 27 30 31
32 33 36 37 40 41 44 45
34 35 38 39 42 43 46 47
48 49 52 53 56 57 60 61
50 51 54 55 58 59 62 63
"""),
    10: _grid("""
 0  1  2  3  8  9 10 11
 4  5  6  7 12 13 14 15
16 17 18 19 24 25 26 27
20 21 22 23 28 29 30 31
32 33 34 35 40 41 42 43
36 37 38 39 44 45 46 47
48 49 50 51 56 57 58 59
52 53 54 55 60 61 62 63
"""),
}

# image of D_n^j under (1,i), sign ignored
TABLE_N4 = {
    1: (1, 2, 3),
    2: (1, 3, 2),
    3: (2, 1, 3),
    4: (3, 2, 1),
}

TABLE_N6 = {
    1: (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
    2: (1, 5, 6, 7, 2, 3, 4, 8, 9, 10),
    3: (1, 10, 9, 8, 5, 6, 7, 4, 3, 2),
    4: (2, 1, 3, 4, 5, 8, 9, 6, 7, 10),
    5: (3, 2, 1, 4, 8, 6, 10, 5, 9, 7),
    6: (4, 2, 3, 1, 9, 10, 7, 8, 5, 6),
}

SIGMA_N6 = [
    'I', '(1,4)', '(1,5)', '(1,6)', '(1,2)(1,4)', '(1,2)(1,5)', '(1,2)(1,6)',
    '(1,4)(1,2)(1,5)', '(1,4)(1,2)(1,6)', '(1,5)(1,2)(1,6)',
]


def laplace_det(entries):
    """Cofactor expansion along rows, memoized on the set of used columns"""
    rows = [list(row) for row in entries]
    d = len(rows)
    zero = ZERO if rows and not isinstance(rows[0][0], complex) else 0j

    @lru_cache(maxsize=None)
    def expand(row: int, used: int):
        if row == d:
            return zero + 1
        total = zero
        sign = 1
        for col in range(d):
            if used & (1 << col):
                continue
            value = rows[row][col]
            if value:
                term = value * expand(row + 1, used | (1 << col))
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return expand(0, 0)


@pytest.fixture
def chi6():
    return canonical_state('chi6', 6)


@pytest.fixture
def ghz6():
    return canonical_state('ghz', 6)


@pytest.fixture
def w6():
    return canonical_state('w', 6)


@pytest.fixture
def states_dir(tmp_path):
    return tmp_path / 'states'


@pytest.fixture(autouse=True)
def restore_limits():
    exact, floating = config.MAX_QUBITS_EXACT, config.MAX_QUBITS_FLOAT
    yield
    config.MAX_QUBITS_EXACT, config.MAX_QUBITS_FLOAT = exact, floating
