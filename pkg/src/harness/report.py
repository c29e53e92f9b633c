"""
Verification Reports
Per-check records and the report assembled from them
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Record:
    """
    One checked instance

    Spectral records carry λ1 in ``value`` and the compared radius in
    ``threshold``; sign records carry the polynomial value against 0.
    ``margin`` is signed so that a positive value means the checked
    statement holds with room to spare.
    """

    check: str
    n: int
    k: Optional[int] = None
    graph: str = ''
    params: str = ''
    value: Optional[float] = None
    threshold: Optional[float] = None
    margin: Optional[float] = None
    outcome: str = 'PASS'
    anomaly: bool = False
    borderline: bool = False
    exceptional: bool = False
    note: str = ''

    def sort_key(self):
        return (self.check, self.n, self.k or 0, self.params, self.graph, self.outcome)


@dataclass
class VerificationReport:
    """Campaign output: sorted records, parameter echo and derived summary"""

    campaign: str
    parameters: Dict[str, Any]
    records: List[Record] = field(default_factory=list)
    seed: Optional[int] = None
    examined: int = 0

    def add(self, record: Record) -> None:
        self.records.append(record)

    def finalize(self) -> 'VerificationReport':
        """Sort records into their canonical order"""
        self.records.sort(key=Record.sort_key)
        return self

    @property
    def summary(self) -> Dict[str, int]:
        anomalies = sum(1 for record in self.records if record.anomaly)
        return {
            'classes': self.examined,
            'records': len(self.records),
            'passed': len(self.records) - anomalies,
            'anomalies': anomalies,
            'borderline': sum(1 for record in self.records if record.borderline),
            'exceptional': sum(1 for record in self.records if record.exceptional),
        }

    @property
    def has_anomalies(self) -> bool:
        return any(record.anomaly for record in self.records)

    def anomalies(self) -> List[Record]:
        return [record for record in self.records if record.anomaly]
