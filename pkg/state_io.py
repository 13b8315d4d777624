"""
State file reader and writer for the slocc-state v1 text format

    # slocc-state v1
    n 6
    0 1 0
    63 -1 0

Each amplitude line is `<index> <re> <im>`; omitted indices are zero.
"""

import logging
from pathlib import Path
from typing import IO, Dict, Optional, Tuple, Union

import config
from qstate import ModeMismatchError, PureState, QubitCountError, StateFormatError, check_qubit_count
from scalars import GaussRational, parse_component, scalar_parts, to_array, zero

logger = logging.getLogger(__name__)


class StateFileReader:
    """Parses slocc-state v1 text and decides which arithmetic mode it supports"""

    def __init__(self, source_name: str = '<text>'):
        self.source_name = source_name

    def _fail(self, line_no: int, message: str) -> StateFormatError:
        return StateFormatError(f"{self.source_name}:{line_no}: {message}")

    def parse(self, text: str, mode: Optional[str] = None) -> PureState:
        """
        Parse state text

        Args:
            text: file contents
            mode: 'exact', 'float', or None to pick exact when every number is rational

        Returns:
            PureState in the chosen mode
        """
        lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), 1)]
        lines = [(no, line) for no, line in lines if line]

        if not lines or lines[0][1] != config.STATE_FILE_HEADER:
            raise self._fail(lines[0][0] if lines else 1, f"expected header '{config.STATE_FILE_HEADER}'")
        if len(lines) < 2:
            raise self._fail(lines[0][0], "missing 'n <even integer>' line")

        n = self._parse_qubit_line(*lines[1])
        terms, exact_eligible = self._parse_amplitudes(lines[2:], n)

        if mode is None:
            mode = config.EXACT_MODE if exact_eligible else config.FLOAT_MODE
        elif mode == config.EXACT_MODE and not exact_eligible:
            raise ModeMismatchError(f"{self.source_name}: decimal amplitudes cannot be read in exact mode")

        check_qubit_count(n, mode)
        amplitudes = [zero(mode)] * (2 ** n)
        for index, (re_value, im_value) in terms.items():
            if mode == config.EXACT_MODE:
                amplitudes[index] = GaussRational(re_value, im_value)
            else:
                amplitudes[index] = complex(float(re_value), float(im_value))

        logger.info(f"Read {len(terms)} amplitudes of a {n}-qubit state from {self.source_name} ({mode} mode)")
        return PureState(n, to_array(amplitudes, mode), mode)

    def _parse_qubit_line(self, line_no: int, line: str) -> int:
        parts = line.split()
        if len(parts) != 2 or parts[0] != 'n':
            raise self._fail(line_no, f"expected 'n <even integer>', got '{line}'")
        try:
            n = int(parts[1])
        except ValueError:
            raise self._fail(line_no, f"qubit count '{parts[1]}' is not an integer")
        if n < 2 or n % 2:
            raise QubitCountError(f"{self.source_name}:{line_no}: qubit count must be even and at least 2, got {n}")
        return n

    def _parse_amplitudes(self, lines, n: int) -> Tuple[Dict[int, tuple], bool]:
        terms: Dict[int, tuple] = {}
        exact_eligible = True
        for line_no, line in lines:
            parts = line.split()
            if len(parts) != 3:
                raise self._fail(line_no, f"expected '<index> <re> <im>', got '{line}'")
            try:
                index = int(parts[0])
            except ValueError:
                raise self._fail(line_no, f"index '{parts[0]}' is not a decimal integer")
            if not 0 <= index < 2 ** n:
                raise self._fail(line_no, f"index {index} is outside [0, {2 ** n})")
            if index in terms:
                raise self._fail(line_no, f"duplicate index {index}")
            try:
                re_value, re_exact = parse_component(parts[1])
                im_value, im_exact = parse_component(parts[2])
            except (ValueError, ZeroDivisionError) as e:
                raise self._fail(line_no, str(e))
            exact_eligible = exact_eligible and re_exact and im_exact
            terms[index] = (re_value, im_value)
        return terms, exact_eligible


def format_state(state: PureState) -> str:
    """slocc-state v1 text with nonzero amplitudes in ascending index order"""
    lines = [config.STATE_FILE_HEADER, f"n {state.n}"]
    for index in state.nonzero_indices():
        re_text, im_text = scalar_parts(state.amplitudes[index])
        lines.append(f"{index} {re_text} {im_text}")
    return '\n'.join(lines) + '\n'


def parse_state(text: str, mode: Optional[str] = None, source_name: str = '<text>') -> PureState:
    return StateFileReader(source_name).parse(text, mode)


def read_state(source: Union[str, Path, IO[str]], mode: Optional[str] = None) -> PureState:
    """Read a state from a path or an open text stream ('-' streams come from click)"""
    if hasattr(source, 'read'):
        name = str(getattr(source, 'name', '<stream>'))
        return parse_state(_decode(source.read, name), mode, source_name=name)
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"State file not found: {path}")
    return parse_state(_decode(lambda: path.read_text(encoding='utf-8'), str(path)), mode, source_name=str(path))


def _decode(read, name: str) -> str:
    try:
        return read()
    except UnicodeDecodeError as e:
        raise StateFormatError(f"{name}: not valid UTF-8 text ({e.reason} at byte {e.start})")


def write_state(state: PureState, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_state(state), encoding='utf-8')
    logger.info(f"Wrote {state.n}-qubit state to {path}")
    return path
