import pytest

from src.extremal.families import gstar, gstar_params
from src.harness.campaigns import create_harness
from src.harness.claims import RowTally, split_join_radius, sweep_claims
from src.harness.settings import CampaignParameterError
from src.spectra.distance_spectra import spectral_radius


@pytest.fixture(scope='module')
def small_sweep():
    return sweep_claims(5, 3, 15)


def test_small_grid_has_no_failures(small_sweep):
    assert small_sweep.summary['anomalies'] == 0
    assert not small_sweep.has_anomalies
    assert small_sweep.parameters['k_max'] == 5
    assert small_sweep.summary['classes'] >= small_sweep.summary['records']


def test_expected_checks_are_reported(small_sweep):
    checks = {record.check for record in small_sweep.records}
    assert {
        'gtilde_below_gprime', 'gstar_below_gtilde', 'f_negative_at_gstar_radius',
        'h_negative_beyond_boundary', 'gstar_below_gtilde_boundary', 'r_negative', 'q_negative',
        'gstar_below_gsharp', 'h_line_zero_at_twelve', 'h_line_negative', 'gsharp_equals_gstar',
        'gsharp_below_gstar', 'g_negative_at_gsharp_radius', 'g_root_matches_gstar',
        'gstar_wiener_closed_form', 'f_root_matches_gtilde', 'rho_sharp_matches_radius',
        'g_is_f_at_s1', 'q_is_h_at_boundary', 'r_is_h_at_boundary', 'f_minus_g_is_scaled_p',
        'h_is_shifted_p', 'h_monotone_beyond_boundary', 'f_root_matches_gtilde_bfs',
    } <= checks
    boundary = [record for record in small_sweep.records if record.check == 'gstar_below_gtilde_boundary']
    assert [record.k for record in boundary] == [5]


def test_gsharp_records(small_sweep):
    sharp = [record for record in small_sweep.records if record.check == 'gstar_below_gsharp']
    assert [record.n for record in sharp] == [12, 15]
    twelve = sharp[0]
    assert twelve.n == 12
    assert twelve.margin == pytest.approx(9 + 2 * 19 ** 0.5 - twelve.value, abs=1e-9)
    assert twelve.margin > 0.4
    [zero] = [record for record in small_sweep.records if record.check == 'h_line_zero_at_twelve']
    assert zero.value == 0.0 and zero.outcome == 'PASS'


def test_h_peaks_at_boundary(small_sweep):
    monotone = [record for record in small_sweep.records if record.check == 'h_monotone_beyond_boundary']
    assert {(record.k, record.params, record.n) for record in monotone} == {
        (4, 's=2', 10), (4, 's=3', 13), (5, 's=2', 12),
    }
    assert all(record.outcome == 'PASS' and record.margin == 0.0 for record in monotone)


def test_f_root_agrees_with_breadth_first_radius(small_sweep):
    rows = [record for record in small_sweep.records if record.check == 'f_root_matches_gtilde_bfs']
    assert {record.k for record in rows} == {4, 5}
    assert all(record.outcome == 'PASS' for record in rows)


def test_records_are_sorted(small_sweep):
    keys = [record.sort_key() for record in small_sweep.records]
    assert keys == sorted(keys)


@pytest.mark.parametrize('k_max, s_max, n_max', [(4, 2, 12), (5, 1, 12), (5, 2, 11)])
def test_grid_minimums(k_max, s_max, n_max):
    with pytest.raises(CampaignParameterError):
        sweep_claims(k_max, s_max, n_max)


def test_harness_delegates():
    report = create_harness().sweep_claims(5, 2, 12)
    assert report.campaign == 'claims'
    assert report.summary['anomalies'] == 0


def test_split_join_radius_matches_graph():
    assert split_join_radius(gstar_params(12, 4)) == pytest.approx(spectral_radius(gstar(12, 4)), abs=1e-8)


def test_row_tally_keeps_worst_point_and_first_failure():
    row = RowTally('demo', 5, 's=2')
    assert row.record() is None

    row.add(10, 0.5, True)
    row.add(11, 0.1, True)
    record = row.record()
    assert record.outcome == 'PASS' and not record.anomaly
    assert record.n == 11 and record.margin == 0.1
    assert record.note == '2 points, worst at n=11'

    row.add(12, -0.2, False, 't=4')
    row.add(13, -0.3, False, 't=5')
    record = row.record()
    assert record.outcome == 'FAIL' and record.anomaly
    assert record.n == 12
    assert record.margin == -0.3
    assert record.note == 'first failure at n=12: t=4'


@pytest.mark.slow
def test_default_grid():
    report = sweep_claims(12, 50, 60)
    assert report.summary['anomalies'] == 0
