"""
Command line interface for the SLOCC determinant toolkit
Enumeration, invariant evaluation, signatures, inequivalence checks, SLOCC
equation verification, completeness tables and canonical state files
"""

import functools
import logging
from typing import Optional

import click
from dotenv import load_dotenv

load_dotenv()

import config
from completeness import CompletenessError, completeness_table
from detengine import NonFiniteMatrixError
from invariants import all_invariants, inequivalence_check, signature, verify_slocc_equation
from qstate import (
    ModeMismatchError, NonInvertibleError, QubitCountError, StateError, StateFormatError,
    canonical_state, check_qubit_count, parse_kind, random_invertible_chain,
)
from report_exporter import (
    ReportExporter, action_table_text, dumps, enumerate_lines, enumerate_report, invariant_report,
    invariant_text, signature_report, signature_text, slocc_report, slocc_summary, verdict_report,
    verdict_text,
)
from state_io import format_state, read_state, write_state

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BAD_QUBITS = 3
EXIT_NON_INVERTIBLE = 4
EXIT_INEQUIVALENT = 10

MODE_CHOICE = click.Choice(config.MODES)
STATE_FILE = click.File('r', encoding='utf-8')


def _exit_code(error: Exception) -> int:
    if isinstance(error, QubitCountError):
        return EXIT_BAD_QUBITS
    if isinstance(error, NonInvertibleError):
        return EXIT_NON_INVERTIBLE
    if isinstance(error, (StateFormatError, ModeMismatchError, StateError, FileNotFoundError,
                          NonFiniteMatrixError)):
        return EXIT_BAD_INPUT
    return EXIT_FAILED


class ExportError(RuntimeError):
    """Some export format could not be written"""


def handle_errors(command):
    """Map domain errors to exit codes with the message on stderr"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (StateError, FileNotFoundError, NonFiniteMatrixError, CompletenessError, ExportError) as e:
            code = _exit_code(e)
            logger.error(f"{command.__name__} failed with exit code {code}: {e}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(code)
    return wrapper


# ═══════════════════════════════════════════════════════════════════
# 🚀 COMMAND GROUP
# ═══════════════════════════════════════════════════════════════════

@click.group()
@click.option('--max-n', type=int, default=None, help='Override the qubit limit of both modes')
@click.option('--log-level', default=None, help='Logging level (default from SLOCC_LOG_LEVEL)')
def cli(max_n: Optional[int], log_level: Optional[str]):
    """SLOCC determinant invariants for even-n qubit pure states"""
    logging.basicConfig(level=(log_level or config.LOG_LEVEL).upper())
    if max_n is not None:
        config.MAX_QUBITS_EXACT = max_n
        config.MAX_QUBITS_FLOAT = max_n


# ═══════════════════════════════════════════════════════════════════
# 🔢 PARTITIONS AND INVARIANTS
# ═══════════════════════════════════════════════════════════════════

@cli.command('enumerate')
@click.option('--n', 'n', type=int, required=True, help='Even number of qubits')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def enumerate_command(n: int, as_json: bool):
    """List the canonical partitions with their sigma words"""
    n = check_qubit_count(n, config.FLOAT_MODE)
    if as_json:
        click.echo(dumps(enumerate_report(n)))
    else:
        click.echo('\n'.join(enumerate_lines(n)))


@cli.command('invariants')
@click.argument('state_file', type=STATE_FILE)
@click.option('--mode', type=MODE_CHOICE, default=None, help='Arithmetic mode (default: from the file)')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@click.option('--zero-factor', type=float, default=None, help='Float zero threshold factor')
@handle_errors
def invariants_command(state_file, mode: Optional[str], as_json: bool, zero_factor: Optional[float]):
    """Evaluate every invariant of STATE_FILE ('-' reads stdin)"""
    state = read_state(state_file, mode)
    vector = all_invariants(state, zero_factor=zero_factor)
    click.echo(dumps(invariant_report(vector)) if as_json else invariant_text(vector))


@cli.command('signature')
@click.argument('state_file', type=STATE_FILE)
@click.option('--mode', type=MODE_CHOICE, default=None)
@click.option('--json', 'as_json', is_flag=True)
@click.option('--zero-factor', type=float, default=None)
@handle_errors
def signature_command(state_file, mode: Optional[str], as_json: bool, zero_factor: Optional[float]):
    """Zero pattern and family id of STATE_FILE"""
    sig = signature(read_state(state_file, mode), zero_factor=zero_factor)
    click.echo(dumps(signature_report(sig)) if as_json else signature_text(sig))


@cli.command('equivalence-check')
@click.argument('file_a', type=STATE_FILE)
@click.argument('file_b', type=STATE_FILE)
@click.option('--mode', type=MODE_CHOICE, default=None)
@click.option('--json', 'as_json', is_flag=True)
@click.option('--zero-factor', type=float, default=None)
@handle_errors
def equivalence_check_command(file_a, file_b, mode: Optional[str], as_json: bool, zero_factor: Optional[float]):
    """INEQUIVALENT (exit 10) with witness indices, or UNDECIDED"""
    verdict = inequivalence_check(read_state(file_a, mode), read_state(file_b, mode), mode, zero_factor)
    click.echo(dumps(verdict_report(verdict)) if as_json else verdict_text(verdict))
    if verdict.inequivalent:
        click.get_current_context().exit(EXIT_INEQUIVALENT)


# ═══════════════════════════════════════════════════════════════════
# ✅ VERIFICATION
# ═══════════════════════════════════════════════════════════════════

@cli.command('verify-slocc')
@click.argument('state_file', type=STATE_FILE)
@click.option('--trials', type=click.IntRange(min=1), default=10, show_default=True)
@click.option('--seed', type=int, default=config.DEFAULT_SEED, show_default=True)
@click.option('--mode', type=MODE_CHOICE, default=None)
@click.option('--zero-factor', type=float, default=None)
@click.option('--json', 'as_json', is_flag=True)
@handle_errors
def verify_slocc_command(state_file, trials: int, seed: int, mode: Optional[str],
                         zero_factor: Optional[float], as_json: bool):
    """Check the determinant equation under random invertible operator chains"""
    state = read_state(state_file, mode)
    reports = []
    for trial in range(trials):
        chain = random_invertible_chain(state.n, state.mode, seed=[seed, trial])
        report = verify_slocc_equation(state, chain, zero_factor=zero_factor)
        reports.append(report)
        if not as_json:
            status = 'pass' if report.passed else 'FAIL'
            click.echo(f"trial {trial}  {status}  {slocc_summary(report)}")

    if as_json:
        click.echo(dumps([slocc_report(r) for r in reports]))
    failed = sum(not r.passed for r in reports)
    if failed:
        logger.error(f"{failed} of {trials} SLOCC trials failed")
        click.get_current_context().exit(EXIT_FAILED)


@cli.command('completeness')
@click.option('--n', 'n', type=int, required=True, help='Even number of qubits')
@click.option('--probes', type=click.IntRange(min=1), default=config.DEFAULT_PROBES, show_default=True)
@click.option('--seed', type=int, default=config.DEFAULT_SEED, show_default=True)
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Thread pool width')
@click.option('--json', 'as_json', is_flag=True)
@click.option('--signs', is_flag=True, help='Show the sign of every image')
@click.option('--export', 'export_dir', type=click.Path(file_okay=False), default=None,
              help='Also write JSON, CSV and Markdown into this directory')
@handle_errors
def completeness_command(n: int, probes: int, seed: int, workers: Optional[int], as_json: bool,
                         signs: bool, export_dir: Optional[str]):
    """Action of the transpositions (1,i) on the invariants"""
    table = completeness_table(n, probes=probes, seed=seed, workers=workers)
    click.echo(dumps(table.to_dict()) if as_json else action_table_text(table, with_signs=signs))
    if export_dir:
        exported = ReportExporter(export_dir).export_all_formats(table)
        for fmt, path in exported.items():
            click.echo(f"{fmt}: {path}", err=True)
        missing = [fmt for fmt in config.EXPORT_FORMATS if fmt not in exported]
        if missing:
            raise ExportError(f"Could not export {', '.join(missing)} to {export_dir}")


# ═══════════════════════════════════════════════════════════════════
# 🏗️ STATE FILES
# ═══════════════════════════════════════════════════════════════════

@cli.command('canonical')
@click.argument('kind')
@click.option('--n', 'n', type=int, required=True)
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None, help='Write to a file')
@click.option('--mode', type=MODE_CHOICE, default=config.EXACT_MODE, show_default=True)
@handle_errors
def canonical_command(kind: str, n: int, output: Optional[str], mode: str):
    """Emit a ghz, w, dicke:k or chi6 state in slocc-state v1 format"""
    name, k = parse_kind(kind)
    state = canonical_state(name, n, mode, k)
    if output:
        write_state(state, output)
    else:
        click.echo(format_state(state), nl=False)


def main():
    cli()


if __name__ == '__main__':
    main()
