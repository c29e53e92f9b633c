"""
Report Serialization
VerificationReport to JSON and CSV, and JSON back to a report
"""
import csv
import io
import json
from dataclasses import asdict, fields
from typing import Any, Dict

from ..harness.report import Record, VerificationReport


SIGNIFICANT_DIGITS = 15

RECORD_FIELDS = [f.name for f in fields(Record)]


def _round(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, dict):
        return {key: _round(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(item) for item in value]
    return value


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    return {
        'campaign': report.campaign,
        'parameters': _round(report.parameters),
        'seed': report.seed,
        'summary': report.summary,
        'records': [_round(asdict(record)) for record in report.records],
    }


def report_to_json(report: VerificationReport) -> str:
    """
    Serialize a report as one JSON object

    Floats carry 15 significant digits and keys keep a fixed order, so equal
    reports serialize to identical text.
    """
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2, allow_nan=False)


def report_from_json(text: str) -> VerificationReport:
    """
    Rebuild a report from report_to_json output

    Raises:
        ValueError: If the document is not a report or the summary does not
            match the records
    """
    document = json.loads(text)
    try:
        records = [Record(**entry) for entry in document['records']]
        report = VerificationReport(
            campaign=document['campaign'],
            parameters=document['parameters'],
            records=records,
            seed=document['seed'],
            examined=document['summary']['classes'],
        )
    except (KeyError, TypeError) as e:
        raise ValueError(f"Not a verification report: {e}")

    if report.summary != document['summary']:
        raise ValueError("Report summary does not match its records")
    return report


def report_to_csv(report: VerificationReport) -> str:
    """Flat CSV export, one row per record, header first"""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=RECORD_FIELDS, lineterminator='\n')
    writer.writeheader()
    for record in report.records:
        row = _round(asdict(record))
        writer.writerow({key: '' if value is None else value for key, value in row.items()})
    return buffer.getvalue()
