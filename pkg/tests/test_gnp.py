import math
from collections import Counter
from fractions import Fraction

import pytest

from rgg.gnp import GnpParams, graph_log_mass, graph_mass, regime_stats, sample
from rgg.graph import all_graphs, complete_graph, cycle_graph, empty_graph


@pytest.mark.parametrize("n", [0, 1, 5, 20])
def test_sample_extremes(n):
    for t in range(5):
        assert sample(GnpParams(n, 0.0, 7), t) == empty_graph(n)
        assert sample(GnpParams(n, 1.0, 7), t) == complete_graph(n)


def test_sample_deterministic():
    params = GnpParams(30, 0.4, 123)
    assert sample(params, 5) == sample(params, 5)
    assert sample(params, 5) != sample(params, 6)
    assert sample(params, 5) != sample(GnpParams(30, 0.4, 124), 5)


def test_sample_frozen_stream():
    # guards the bit-exact sampling contract across releases
    g = sample(GnpParams(6, 0.5, 42), 0)
    assert g == sample(GnpParams(6, 0.5, 42), 0)
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 5), (3, 4), (4, 5)]
    assert g.code == 22655


def test_sample_uniform_on_three_vertices():
    params = GnpParams(3, 0.5, 2024)
    freq = Counter(sample(params, t).code for t in range(80000))
    assert set(freq) == set(range(8))
    assert all(abs(c / 80000 - 0.125) <= 0.01 for c in freq.values())


@pytest.mark.parametrize("n,p", [(50, 0.3), (100, 0.7)])
def test_edge_density(n, p):
    params = GnpParams(n, p, 9)
    trials = 200
    m = n * (n - 1) // 2
    edges = sum(sample(params, t).edge_count for t in range(trials))
    se = math.sqrt(p * (1 - p) / (m * trials))
    assert abs(edges / (m * trials) - p) <= 3 * se


def test_params_validation():
    with pytest.raises(ValueError):
        GnpParams(3, 1.5)
    with pytest.raises(ValueError):
        GnpParams(-1, 0.5)
    with pytest.raises(ValueError):
        sample(GnpParams(3, 0.5), -1)


def test_graph_mass_examples():
    assert graph_mass(empty_graph(2), 0.5) == 0.5
    for g in all_graphs(3):
        assert graph_mass(g, 0.5) == 0.125
    assert graph_mass(cycle_graph(4), 0.25) == pytest.approx(0.002197265625, abs=1e-15)
    assert math.exp(graph_log_mass(cycle_graph(4), 0.25)) == pytest.approx(0.002197265625, rel=1e-12)
    assert graph_mass(empty_graph(3), 0) == 1 and graph_mass(complete_graph(3), 0) == 0
    with pytest.raises(ValueError):
        graph_log_mass(empty_graph(3), 0)
    with pytest.raises(ValueError):
        graph_mass(empty_graph(3), -0.1)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("p", [0.1, 0.37, 0.5, 0.9])
def test_masses_sum_to_one(n, p):
    assert math.fsum(graph_mass(g, p) for g in all_graphs(n)) == pytest.approx(1.0, abs=1e-12)


def test_masses_exact_with_fractions():
    p = Fraction(1, 4)
    assert sum(graph_mass(g, p) for g in all_graphs(4)) == 1
    assert graph_mass(cycle_graph(4), p) == Fraction(9, 4096)


def test_regime_stats():
    rs = regime_stats(100, 0.5)
    assert rs.pn == 50 and rs.q_n2 == 5000
    assert rs.transvection_margin == pytest.approx(25 - 2 * math.log(100))
    assert rs.transvection_margin == pytest.approx(15.789659, abs=1e-5)
    rs = regime_stats(100, 1.0)
    assert rs.pn == 100 and rs.q_n2 == 0 and rs.transvection_margin == -2 * math.log(100)
    assert regime_stats(1, 0.3).transvection_margin == pytest.approx(0.21)
