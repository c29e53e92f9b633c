import mpmath
import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.extremal.families import gsharp, gstar
from src.graphs.graph_core import DisconnectedGraphError, Graph, complete, cycle, disjoint_union, path, star
from src.spectra.distance_spectra import (
    ConvergenceError, all_pairs_distances, full_spectrum, lambda1, lambda1_high_precision,
    spectral_radius, wiener, wiener_bound,
)
from tests.oracles import GSHARP_9_RADIUS, GSHARP_12_RADIUS, connected_graphs


# ============================================================================
# DISTANCES
# ============================================================================

def test_path_distances():
    d = all_pairs_distances(path(4))
    assert d.entries.tolist() == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    assert d.entries.dtype == np.uint16
    assert d.order == 4


def test_distance_matrix_is_read_only():
    d = all_pairs_distances(path(3))
    with pytest.raises(ValueError):
        d.entries[0, 1] = 5


def test_disconnected_graph_rejected():
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(disjoint_union(path(2), path(2)))


@pytest.mark.parametrize('g, expected', [
    (path(4), 10),
    (complete(5), 10),
    (star(4), 16),
    (cycle(6), 27),
    (gstar(12, 4), 100),
    (gstar(7, 5), 36),
])
def test_wiener(g, expected):
    assert wiener(all_pairs_distances(g)) == expected


# ============================================================================
# SPECTRAL RADIUS
# ============================================================================

@pytest.mark.parametrize('g, expected', [
    (complete(5), 4.0),
    (cycle(6), 9.0),
    (Graph.from_edges(2, [(0, 1)]), 1.0),
    (gsharp(12), GSHARP_12_RADIUS),
    (gsharp(9), GSHARP_9_RADIUS),
])
def test_known_radii(g, expected):
    assert spectral_radius(g) == pytest.approx(expected, abs=1e-8)


def test_perron_vector_is_positive_unit():
    result = lambda1(all_pairs_distances(gstar(10, 4)))
    assert np.all(result.perron > 0)
    assert np.linalg.norm(result.perron) == pytest.approx(1.0)


def test_single_vertex_rejected():
    with pytest.raises(ValueError):
        lambda1(all_pairs_distances(Graph(1, (0,))))


def test_iteration_cap_raises_with_estimate():
    with pytest.raises(ConvergenceError) as info:
        lambda1(all_pairs_distances(path(6)), max_iterations=1)
    assert info.value.iterations == 1
    assert info.value.estimate > 0


def test_high_precision_refinement():
    with mpmath.workdps(40):
        expected = 9 + 2 * mpmath.sqrt(19)
        value = lambda1_high_precision(all_pairs_distances(gsharp(12)))
        assert abs(value - expected) < mpmath.mpf(10) ** -25


def test_cycle_below_path():
    assert spectral_radius(cycle(6)) < spectral_radius(path(6))


@given(connected_graphs(max_order=9))
@hypothesis_settings(max_examples=60, deadline=None)
def test_radius_matches_numpy_and_wiener_bound(g):
    d = all_pairs_distances(g)
    value = lambda1(d).lambda1
    assert value == pytest.approx(np.linalg.eigvalsh(d.as_float())[-1], abs=1e-8)
    assert value >= wiener_bound(d) - 1e-9


# ============================================================================
# FULL SPECTRUM
# ============================================================================

def test_complete_graph_spectrum():
    assert full_spectrum(all_pairs_distances(complete(4))) == pytest.approx([3.0, -1.0, -1.0, -1.0])


@given(connected_graphs(max_order=9))
@hypothesis_settings(max_examples=40, deadline=None)
def test_spectrum_matches_numpy(g):
    d = all_pairs_distances(g)
    spectrum = full_spectrum(d)
    expected = sorted(np.linalg.eigvalsh(d.as_float()), reverse=True)
    assert spectrum == pytest.approx(expected, abs=1e-8)
    assert sum(spectrum) == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize('n', [4, 10, 17, 21])
def test_path_spectrum_converges(n):
    d = all_pairs_distances(path(n))
    expected = sorted(np.linalg.eigvalsh(d.as_float()), reverse=True)
    assert full_spectrum(d) == pytest.approx(expected, abs=1e-8)
