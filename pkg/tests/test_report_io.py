import csv
import io
import json
import math

import pytest

from src.harness.campaigns import verify_spanning_ktree_bound
from src.harness.report import Record, VerificationReport
from src.interchange.report_io import (
    RECORD_FIELDS, report_from_json, report_to_csv, report_to_dict, report_to_json,
)


def _report() -> VerificationReport:
    report = VerificationReport(campaign='demo', parameters={'k': 5, 'threshold': math.pi}, seed=4, examined=3)
    report.add(Record(check='b', n=7, k=5, graph='F?~v_', value=10.0, threshold=1 / 3, margin=-0.5,
                      outcome='NO', anomaly=True))
    report.add(Record(check='a', n=7, k=5, value=2.0, note='first'))
    return report.finalize()


def test_dict_layout():
    document = report_to_dict(_report())
    assert list(document) == ['campaign', 'parameters', 'seed', 'summary', 'records']
    assert document['summary'] == {
        'classes': 3, 'records': 2, 'passed': 1, 'anomalies': 1, 'borderline': 0, 'exceptional': 0,
    }
    assert [record['check'] for record in document['records']] == ['a', 'b']
    assert list(document['records'][0]) == RECORD_FIELDS


def test_floats_keep_fifteen_significant_digits():
    document = json.loads(report_to_json(_report()))
    assert document['parameters']['threshold'] == 3.14159265358979
    assert document['records'][1]['threshold'] == 0.333333333333333


def test_json_is_deterministic_and_parses_back():
    text = report_to_json(_report())
    assert text == report_to_json(_report())
    restored = report_from_json(text)
    assert restored.summary == _report().summary
    assert restored.records[1].anomaly
    assert restored.seed == 4
    assert report_to_json(restored) == text


def test_campaign_report_parses_back():
    report = verify_spanning_ktree_bound(5, 7)
    restored = report_from_json(report_to_json(report))
    assert restored.summary == report.summary
    assert [record.graph for record in restored.records] == [record.graph for record in report.records]


def test_tampered_summary_is_rejected():
    document = json.loads(report_to_json(_report()))
    document['summary']['anomalies'] = 0
    with pytest.raises(ValueError, match='summary'):
        report_from_json(json.dumps(document))


def test_non_report_documents_are_rejected():
    with pytest.raises(ValueError):
        report_from_json('{"campaign": "demo"}')
    with pytest.raises(ValueError):
        report_from_json('not json')


def test_nan_values_are_refused():
    report = VerificationReport(campaign='demo', parameters={})
    report.add(Record(check='a', n=2, value=float('nan')))
    with pytest.raises(ValueError):
        report_to_json(report)


def test_csv_rows():
    rows = list(csv.DictReader(io.StringIO(report_to_csv(_report()))))
    assert len(rows) == 2
    assert list(rows[0]) == RECORD_FIELDS
    assert rows[0]['check'] == 'a'
    assert rows[0]['threshold'] == ''
    assert rows[1]['anomaly'] == 'True'
    assert rows[1]['graph'] == 'F?~v_'
