import csv
import io
import json

import pytest

from src.cli import commands
from src.cli.commands import EXIT_ANOMALIES, EXIT_OK, EXIT_USAGE, run_cli
from src.extremal.families import gstar
from src.graphs.graph_core import path
from src.harness.report import Record, VerificationReport
from src.interchange.edge_list import graph_to_edge_list
from src.interchange.graph6 import write_graph6


def _run(argv):
    out = io.StringIO()
    code = run_cli(argv, stdout=out)
    return code, out.getvalue()


def test_extremal_gstar():
    code, out = _run(['extremal', 'gstar', '--n', '12', '--k', '4'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['wiener'] == 100
    assert document['wiener_closed'] == 100
    assert document['lambda1'] == pytest.approx(document['lambda1_closed'], abs=1e-8)
    assert document['graph6'] == write_graph6(gstar(12, 4))


def test_extremal_gsharp_closed_form():
    code, out = _run(['extremal', 'gsharp', '--n', '12'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['lambda1'] == pytest.approx(document['lambda1_closed'], abs=1e-8)


def test_ktree_reports_win_violation():
    code, out = _run(['ktree', '--g6', write_graph6(gstar(12, 4)), '--k', '4'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['outcome'] == 'NO'
    assert document['tree_edges'] == []
    assert document['win_violation'] == [0]


def test_spectra_of_complete_graph():
    code, out = _run(['spectra', '--g6', 'C~'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['n'] == 4
    assert document['lambda1'] == pytest.approx(3.0)
    assert document['wiener'] == 6
    assert document['spectrum'] == pytest.approx([3.0, -1.0, -1.0, -1.0])


def test_spectra_of_long_path():
    code, out = _run(['spectra', '--g6', write_graph6(path(10))])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['wiener'] == 165
    assert len(document['spectrum']) == 10
    assert document['spectrum'][0] == pytest.approx(document['lambda1'], abs=1e-8)


def test_edge_list_input(tmp_path):
    source = tmp_path / 'star.txt'
    source.write_text(graph_to_edge_list(gstar(7, 5)), encoding='utf-8')
    code, out = _run(['ktree', '--edges', str(source), '--k', '6'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['outcome'] == 'YES'
    assert len(document['tree_edges']) == 6
    assert document['win_violation'] is None


def test_verify_campaign():
    code, out = _run(['--quiet', 'verify', '--k', '5', '--n', '7'])
    document = json.loads(out)
    assert code == EXIT_OK
    assert document['summary']['classes'] == 853
    assert document['summary']['anomalies'] == 0
    assert document['parameters']['mode'] == 'exhaustive'


def test_verify_csv():
    code, out = _run(['--quiet', 'verify', '--k', '4', '--n', '6', '--csv'])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert rows
    assert all(row['check'] == 'spanning_ktree_bound' for row in rows)
    assert sum(row['exceptional'] == 'True' for row in rows) == 1


def test_sweep_and_lemmas_exit_cleanly():
    code, out = _run(['--quiet', 'sweep', '--kmax', '5', '--smax', '2', '--nmax', '12'])
    assert code == EXIT_OK
    assert json.loads(out)['campaign'] == 'claims'

    code, out = _run(['--quiet', 'lemmas', '--trials', '2', '--seed', '5'])
    assert code == EXIT_OK
    assert json.loads(out)['seed'] == 5


def test_anomalies_set_exit_code(monkeypatch):
    class StubHarness:
        def lemma_property_suite(self, trials, seed):
            report = VerificationReport(campaign='lemmas', parameters={}, seed=seed, examined=1)
            report.add(Record(check='stub', n=2, outcome='FAIL', anomaly=True))
            return report

    monkeypatch.setattr(commands, 'create_harness', lambda **overrides: StubHarness())
    code, out = _run(['lemmas', '--trials', '1'])
    assert code == EXIT_ANOMALIES
    assert json.loads(out)['summary']['anomalies'] == 1


@pytest.mark.parametrize('argv', [
    ['spectra', '--g6', 'C'],
    ['spectra', '--g6', 'A?'],
    ['extremal', 'gstar', '--n', '12'],
    ['extremal', 'gsharp', '--n', '10'],
    ['verify', '--k', '4', '--n', '7'],
    ['verify', '--k', '5', '--n', '9'],
    ['sweep', '--kmax', '4'],
    ['lemmas', '--trials', '0'],
    ['ktree', '--edges', '/nonexistent/graph.txt', '--k', '3'],
    ['ktree', '--g6', 'C~', '--k', '1'],
    ['unknown'],
    ['verify', '--k', '5'],
])
def test_usage_errors(argv):
    code, out = _run(argv)
    assert code == EXIT_USAGE
    assert out == ''
