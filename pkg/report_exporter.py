"""
Report Exporter for the SLOCC determinant toolkit
Renders invariant vectors, signatures, SLOCC checks, verdicts and completeness
tables as text and JSON, and exports tables as JSON, CSV and Markdown
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

import config
from completeness import ActionTable
from invariants import EquivalenceVerdict, InvariantVector, Signature, SloccCheckReport
from partition import enumerate_partitions, sigma_of_partition
from scalars import scalar_parts

logger = logging.getLogger(__name__)


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _bits(bits) -> str:
    return '{' + ','.join(str(b) for b in bits) + '}'


def _value_dict(value) -> Dict[str, str]:
    re_text, im_text = scalar_parts(value)
    return {'re': re_text, 'im': im_text}


def _value_text(value) -> str:
    re_text, im_text = scalar_parts(value)
    return f"{re_text} {im_text}"


# ═══════════════════════════════════════════════════════════════════
# 📝 TEXT AND JSON RENDERERS
# ═══════════════════════════════════════════════════════════════════

def enumerate_lines(n: int) -> List[str]:
    """One line per partition: index, sigma cycle string, row and column bits"""
    return [
        f"{p.canonical_index}  {sigma_of_partition(p).cycle_string()}  rows={_bits(p.row_bits)} cols={_bits(p.col_bits)}"
        for p in enumerate_partitions(n)
    ]


def enumerate_report(n: int) -> List[Dict]:
    return [p.to_dict() for p in enumerate_partitions(n)]


def invariant_report(vector: InvariantVector) -> Dict:
    signature = vector.signature()
    return {
        'n': vector.n,
        'mode': vector.mode,
        'invariants': [
            {
                'index': p.canonical_index,
                'sigma': sigma_of_partition(p).cycle_string(),
                'row_bits': list(p.row_bits),
                'value': _value_dict(v.value),
                'zero': v.zero_verdict,
            }
            for p, v in zip(vector.partitions, vector.values)
        ],
        'signature': signature.delta_string,
        'family_id': signature.family_id,
    }


def invariant_text(vector: InvariantVector) -> str:
    lines = []
    for p, v in zip(vector.partitions, vector.values):
        marker = 'zero' if v.zero_verdict else 'nonzero'
        lines.append(f"D{vector.n}^{p.canonical_index}  {sigma_of_partition(p).cycle_string()}  "
                     f"{_value_text(v.value)}  {marker}")
    lines.append(signature_text(vector.signature()))
    return '\n'.join(lines)


def signature_text(signature: Signature) -> str:
    return f"signature {signature.delta_string}  family {signature.family_id}"


def signature_report(signature: Signature) -> Dict:
    return {'signature': signature.delta_string, 'family_id': signature.family_id}


def slocc_report(report: SloccCheckReport) -> Dict:
    return {
        'n': report.n,
        'mode': report.mode,
        'exponent': report.exponent,
        'det_product': _value_dict(report.det_product),
        'passed': report.passed,
        'max_relative_error': report.max_relative_error,
        'entries': [
            {
                'index': e.index,
                'left': _value_dict(e.left),
                'right': _value_dict(e.right),
                'passed': e.passed,
                'relative_error': e.relative_error,
            }
            for e in report.entries
        ],
    }


def slocc_summary(report: SloccCheckReport) -> str:
    """'exact' for exact checks, otherwise the largest relative error"""
    if report.mode == config.EXACT_MODE:
        return 'exact'
    return f"{report.max_relative_error:.3e}"


def verdict_text(verdict: EquivalenceVerdict) -> str:
    if verdict.inequivalent:
        return f"{verdict.verdict} {','.join(str(i) for i in verdict.witnesses)}"
    return verdict.verdict


def verdict_report(verdict: EquivalenceVerdict) -> Dict:
    return {
        'verdict': verdict.verdict,
        'witnesses': list(verdict.witnesses),
        'signature_a': verdict.signature_a.delta_string,
        'signature_b': verdict.signature_b.delta_string,
    }


def _cell(n: int, target: int, sign: int, with_signs: bool) -> str:
    text = f"D{n}^{target}"
    if with_signs:
        return ('+' if sign > 0 else '-') + text
    return text


def action_table_text(table: ActionTable, with_signs: bool = False) -> str:
    """Rows labeled (1,i); column j holds the image of D_n^j"""
    c = len(table.rows[0].targets) if table.rows else 0
    header = ['', *[f"D{table.n}^{j}" for j in range(1, c + 1)]]
    body = [
        [f"(1,{i})", *[_cell(table.n, t, s, with_signs) for t, s in zip(row.targets, row.signs)]]
        for i, row in enumerate(table.rows, 1)
    ]
    widths = [max(len(line[col]) for line in [header, *body]) for col in range(len(header))]
    return '\n'.join(
        '  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in [header, *body]
    )


def action_table_markdown(table: ActionTable, with_signs: bool = True) -> str:
    c = len(table.rows[0].targets) if table.rows else 0
    lines = [
        f"# Completeness of the determinant invariants for {table.n} qubits",
        '',
        f"- Probes: {table.probes} (used up to {table.probes_used})",
        f"- Seed: {table.seed}",
        '',
        '| | ' + ' | '.join(f"D{table.n}^{j}" for j in range(1, c + 1)) + ' |',
        '|---' * (c + 1) + '|',
    ]
    for i, row in enumerate(table.rows, 1):
        cells = [_cell(table.n, t, s, with_signs) for t, s in zip(row.targets, row.signs)]
        lines.append(f"| (1,{i}) | " + ' | '.join(cells) + ' |')
    return '\n'.join(lines) + '\n'


def action_table_csv(table: ActionTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['transposition', 'source', 'target', 'sign'])
    for i, row in enumerate(table.rows, 1):
        for j, (target, sign) in enumerate(zip(row.targets, row.signs), 1):
            writer.writerow([f"(1,{i})", j, target, sign])
    return buffer.getvalue()


# ═══════════════════════════════════════════════════════════════════
# 📤 EXPORTER
# ═══════════════════════════════════════════════════════════════════

class ReportExporter:
    """Write completeness tables to an export directory"""

    def __init__(self, export_dir: Optional[Union[str, Path]] = None):
        self.export_dir = Path(export_dir) if export_dir else config.EXPORT_DIR

    def _target(self, filename: str, suffix: str) -> Path:
        self.export_dir.mkdir(parents=True, exist_ok=True)
        return self.export_dir / f"{filename}{suffix}"

    def export_all_formats(self, table: ActionTable, filename_base: Optional[str] = None) -> Dict[str, str]:
        """
        Export a table in every configured format

        Returns:
            Dict mapping format to filepath
        """
        if not filename_base:
            filename_base = f"completeness_n{table.n}_seed{table.seed}"
        filename_base = ''.join(c for c in filename_base if c.isalnum() or c in ('-', '_')).strip()

        writers = {
            'json': self.export_json,
            'csv': self.export_csv,
            'markdown': self.export_markdown,
        }
        results = {}
        for fmt in config.EXPORT_FORMATS:
            try:
                results[fmt] = writers[fmt](table, filename_base)
                logger.info(f"Exported {fmt} to {results[fmt]}")
            except OSError as e:
                logger.error(f"{fmt} export failed: {e}")
        return results

    def export_json(self, table: ActionTable, filename: str) -> str:
        path = self._target(filename, '.json')
        path.write_text(dumps(table.to_dict()) + '\n', encoding='utf-8')
        return str(path)

    def export_csv(self, table: ActionTable, filename: str) -> str:
        path = self._target(filename, '.csv')
        path.write_text(action_table_csv(table), encoding='utf-8')
        return str(path)

    def export_markdown(self, table: ActionTable, filename: str) -> str:
        path = self._target(filename, '.md')
        path.write_text(action_table_markdown(table), encoding='utf-8')
        return str(path)
