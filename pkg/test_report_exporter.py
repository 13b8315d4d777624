import csv
import json

import pytest

import config
from completeness import completeness_table
from invariants import all_invariants, inequivalence_check, verify_slocc_equation
from qstate import canonical_state, random_invertible_chain, random_state
from report_exporter import (
    ReportExporter, action_table_csv, action_table_markdown, action_table_text, dumps, enumerate_lines,
    invariant_report, invariant_text, slocc_report, slocc_summary, verdict_report, verdict_text,
)
from scalars import parse_scalar


@pytest.fixture(scope='module')
def table4():
    return completeness_table(4)


def test_enumerate_lines():
    lines = enumerate_lines(6)
    assert len(lines) == 10
    assert lines[0] == '1  I  rows={1,2,3} cols={4,5,6}'
    assert lines[1] == '2  (1,4)  rows={2,3,4} cols={1,5,6}'
    assert lines[9] == '10  (1,5)(1,2)(1,6)  rows={3,5,6} cols={1,2,4}'


def test_invariant_report(chi6):
    report = invariant_report(all_invariants(chi6))
    assert report['signature'] == '0101000101'
    assert report['family_id'] == 650
    tenth = report['invariants'][9]
    assert tenth == {
        'index': 10,
        'sigma': '(1,5)(1,2)(1,6)',
        'row_bits': [3, 5, 6],
        'value': {'re': '-1', 'im': '0'},
        'zero': False,
    }
    assert json.loads(dumps(report)) == report


def test_float_values_use_round_trip_decimals():
    report = invariant_report(all_invariants(canonical_state('chi6', 6, config.FLOAT_MODE)))
    value = report['invariants'][9]['value']
    assert float(value['re']) == pytest.approx(-1 / 4096)


def test_invariant_text(ghz6):
    text = invariant_text(all_invariants(ghz6))
    assert text.splitlines()[0] == 'D6^1  I  0 0  zero'
    assert text.splitlines()[-1] == 'signature 0000000000  family 0'


def test_verdict_renderers(chi6, ghz6):
    verdict = inequivalence_check(chi6, ghz6)
    assert verdict_text(verdict) == 'INEQUIVALENT 2,4,8,10'
    assert verdict_report(verdict)['witnesses'] == [2, 4, 8, 10]
    assert verdict_text(inequivalence_check(ghz6, ghz6)) == 'UNDECIDED'


def test_slocc_renderers():
    psi = random_state(4, config.FLOAT_MODE, seed=1)
    report = verify_slocc_equation(psi, random_invertible_chain(4, config.FLOAT_MODE, seed=2))
    data = slocc_report(report)
    assert data['exponent'] == 2 and data['passed'] and len(data['entries']) == 3
    assert float(slocc_summary(report)) <= config.SLOCC_REL_TOLERANCE

    exact = verify_slocc_equation(random_state(2, seed=1), random_invertible_chain(2, seed=2))
    assert slocc_summary(exact) == 'exact'


def test_action_table_text(table4):
    lines = action_table_text(table4).splitlines()
    assert lines[0].split() == ['D4^1', 'D4^2', 'D4^3']
    assert lines[3].split() == ['(1,3)', 'D4^2', 'D4^1', 'D4^3']
    signed = action_table_text(table4, with_signs=True).splitlines()
    assert all(cell[0] in '+-' for cell in signed[1].split()[1:])


def test_action_table_markdown(table4):
    text = action_table_markdown(table4)
    assert '| (1,4) | ' in text
    assert text.startswith('# Completeness of the determinant invariants for 4 qubits')


def test_action_table_csv(table4):
    rows = list(csv.reader(action_table_csv(table4).splitlines()))
    assert rows[0] == ['transposition', 'source', 'target', 'sign']
    assert len(rows) == 1 + 4 * 3
    assert rows[7][:3] == ['(1,3)', '1', '2']


def test_export_all_formats(tmp_path, table4):
    results = ReportExporter(tmp_path / 'exports').export_all_formats(table4)
    assert set(results) == set(config.EXPORT_FORMATS)
    data = json.loads((tmp_path / 'exports' / 'completeness_n4_seed0.json').read_text(encoding='utf-8'))
    assert data == table4.to_dict()
    assert results['markdown'].endswith('.md')


def test_export_filename_is_sanitized(tmp_path, table4):
    results = ReportExporter(tmp_path).export_all_formats(table4, 'n4 table/../x')
    assert all('/' not in path[len(str(tmp_path)) + 1:] for path in results.values())


def test_exact_json_values_parse_back():
    state = random_state(4, seed=[3, 3])
    vector = all_invariants(state)
    report = json.loads(dumps(invariant_report(vector)))
    for entry, value in zip(report['invariants'], vector.values):
        parsed = parse_scalar(entry['value']['re'], entry['value']['im'], config.EXACT_MODE)
        assert parsed == value.value


def test_exact_slocc_json_values_parse_back():
    state = random_state(4, seed=[4, 4])
    report = verify_slocc_equation(state, random_invertible_chain(4, seed=[4, 5]))
    data = json.loads(dumps(slocc_report(report)))
    assert parse_scalar(data['det_product']['re'], data['det_product']['im']) == report.det_product
    for entry, original in zip(data['entries'], report.entries):
        assert parse_scalar(entry['right']['re'], entry['right']['im']) == original.right
