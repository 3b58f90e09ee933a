import json
import math
import random

import pytest
from hypothesis import given, strategies as st

from rgg import harness as h
from rgg import oracle
from rgg.gnp import GnpParams, sample


def wilson_by_quadratic(k, n, z=h.Z95):
    """Roots in p of (phat - p)^2 = z^2 p (1 - p) / n."""
    phat = k / n
    a = 1 + z * z / n
    b = -(2 * phat + z * z / n)
    c = phat * phat
    disc = math.sqrt(max(b * b - 4 * a * c, 0.0))
    return (-b - disc) / (2 * a), (-b + disc) / (2 * a)


def test_wilson_edges():
    assert h.wilson_interval(0, 50)[0] == 0.0
    assert h.wilson_interval(50, 50)[1] == 1.0
    lo, hi = h.wilson_interval(0, 500)
    assert hi == pytest.approx(wilson_by_quadratic(0, 500)[1], abs=1e-15)
    assert hi < 0.008
    with pytest.raises(ValueError):
        h.wilson_interval(3, 2)
    with pytest.raises(ValueError):
        h.wilson_interval(0, 0)


@given(st.integers(1, 5000).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))))
def test_wilson_matches_quadratic_roots(kn):
    k, n = kn
    lo, hi = h.wilson_interval(k, n)
    ref_lo, ref_hi = wilson_by_quadratic(k, n)
    assert 0 <= lo <= k / n <= hi <= 1
    if 0 < k < n:
        assert lo == pytest.approx(ref_lo, abs=1e-12) and hi == pytest.approx(ref_hi, abs=1e-12)


def test_schedules():
    assert h.Schedule("constant", (0.3,))(100) == 0.3
    assert h.Schedule("inverse_n", (2.0,))(100) == 0.02
    assert h.Schedule("power", (1.0, -0.5))(100) == pytest.approx(0.1)
    assert h.Schedule("one_minus_power", (1.0, 3.0))(200) == 1 - 200**-3
    # clamping
    assert h.Schedule("inverse_n", (5.0,))(2) == 1.0
    assert h.Schedule("one_minus_power", (2.0, 1.0))(1) == 0.0
    assert h.Schedule("constant", (-0.5,))(3) == 0.0
    assert h.Schedule("one_minus_power", (1.0, 3.0)).label() == "one_minus_power(1.0, 3.0)"
    for kind, params in (("cubic", (1.0,)), ("constant", (1.0, 2.0)), ("power", (1.0,)), ("constant", (math.nan,))):
        with pytest.raises(h.ConfigError):
            h.Schedule(kind, params)


CONFIG = """
# demo
n_values = 4, 5
p_schedule = constant; inverse_n
p_param = 0.5; 2
trials = 40
seed = 7
properties = has_empty_square, connected
statistics = missing_edges
"""


def test_parse_config():
    cfg = h.parse_config(CONFIG)
    assert cfg.n_values == [4, 5]
    assert cfg.schedules == [h.Schedule("constant", (0.5,)), h.Schedule("inverse_n", (2.0,))]
    assert cfg.trials == 40 and cfg.seed == 7
    assert cfg.properties == ["has_empty_square", "connected"]
    assert cfg.statistics == ["missing_edges"]


@pytest.mark.parametrize(
    "text",
    [
        CONFIG.replace("trials = 40", "trials = 0"),
        CONFIG.replace("trials = 40", "trials = many"),
        CONFIG.replace("seed = 7", ""),
        CONFIG.replace("connected", "planar"),
        CONFIG.replace("missing_edges", "triangles"),
        CONFIG + "colour = blue\n",
        CONFIG + "seed = 8\n",
        CONFIG + "just words\n",
        CONFIG.replace("p_param = 0.5; 2", "p_param = 0.5"),
        CONFIG.replace("n_values = 4, 5", "n_values = 0"),
        CONFIG.replace("seed = 7", "seed = -1"),
        "n_values = 4\np_schedule = constant\np_param = 0.5\ntrials = 3\nseed = 1\n",
    ],
)
def test_config_errors(text):
    with pytest.raises(h.ConfigError):
        h.parse_config(text)


def test_load_config_missing_file(tmp_path):
    with pytest.raises(h.ConfigError):
        h.load_config(tmp_path / "absent.cfg")


def test_estimate_property_examples():
    row = h.estimate_property(9, 1.0, 100, 3, "complete")
    assert row.successes == 100 and row.estimate == 1.0 and row.ci_high == 1.0
    row = h.estimate_property(9, 0.0, 100, 3, "complete")
    assert row.successes == 0 and row.ci_low == 0.0
    assert row.regime["pn"] == 0.0
    with pytest.raises(ValueError):
        h.estimate_property(9, 0.5, 10, 3, "planar")


def test_estimate_property_deterministic():
    a = h.estimate_property(20, 0.3, 50, 11, "star_two_connected")
    b = h.estimate_property(20, 0.3, 50, 11, "star_two_connected")
    assert a == b
    assert a.ci_low <= a.estimate <= a.ci_high


def test_aggregation_is_order_independent():
    params = GnpParams(8, 0.4, 99)
    order = list(range(200))
    random.Random(5).shuffle(order)
    shuffled = sum(h.PROPERTIES["has_empty_square"](sample(params, t)) for t in order)
    halves = sum(
        sum(h.PROPERTIES["has_empty_square"](sample(params, t)) for t in part) for part in (order[100:], order[:100])
    )
    assert shuffled == halves == h.estimate_property(8, 0.4, 200, 99, "has_empty_square").successes


def test_out_finite_raag_property():
    from rgg.graph import cycle_graph, path_graph

    assert h.PROPERTIES["out_finite_raag"](cycle_graph(5))
    assert not h.PROPERTIES["out_finite_raag"](path_graph(5))


def test_compare_statistic_small():
    row = h.compare_statistic(3, 0.5, 10000, 1, "separating_witnesses")
    assert row.closed_form == pytest.approx(0.75, abs=1e-12)
    assert row.estimate == pytest.approx(0.75, abs=0.05)
    assert abs(row.z_score) <= 4
    exact = h.compare_statistic(5, 1.0, 20, 1, "missing_edges")
    assert exact.estimate == 0 and exact.z_score == 0.0
    with pytest.raises(ValueError):
        h.compare_statistic(5, 0.5, 10, 1, "triangles")


@pytest.mark.slow
@pytest.mark.parametrize("stat", ["square_tuples", "square_tuples_squared"])
def test_compare_statistic_square_moments(stat):
    row = h.compare_statistic(12, 0.5, 100000, 42, stat)
    assert abs(row.z_score) <= 4, row


@pytest.mark.parametrize("stat", ["missing_edges", "domination_pairs"])
def test_compare_statistic_other(stat):
    row = h.compare_statistic(10, 0.6, 5000, 2, stat)
    assert abs(row.z_score) <= 4, row


AUDIT = [
        (3, 0.5, "connected"), (3, 0.2, "star_two_connected"), (3, 0.7, "has_domination_pair"),
        (4, 0.5, "has_empty_square"), (4, 0.3, "connected"), (4, 0.8, "star_two_connected"),
        (4, 0.6, "complement_connected"), (4, 0.9, "complete"), (4, 0.5, "out_finite_raag"),
        (5, 0.5, "has_empty_square"), (5, 0.4, "connected"), (5, 0.6, "star_two_connected"),
        (5, 0.3, "has_domination_pair"), (5, 0.7, "complement_connected"), (5, 0.8, "has_empty_square"),
        (5, 0.2, "connected"), (5, 0.9, "complete"), (5, 0.5, "out_finite_raag"),
        (2, 0.5, "complete"), (3, 0.6, "complement_connected"),
]


def exact_property(n, p, prop):
    if prop == "out_finite_raag":
        dom = oracle.statistic_values(n, "has_domination_pair")
        s2c = oracle.statistic_values(n, "star_two_connected")
        m = n * (n - 1) // 2
        return sum(
            p ** bin(c).count("1") * (1 - p) ** (m - bin(c).count("1"))
            for c in range(1 << m)
            if not dom[c] and s2c[c]
        )
    return oracle.probability(n, p, prop)


def test_monte_carlo_audit_against_oracle():
    assert len(AUDIT) == 20
    hits = 0
    for i, (n, p, prop) in enumerate(AUDIT):
        row = h.estimate_property(n, p, 2000, 1000 + i, prop)
        hits += row.ci_low <= exact_property(n, p, prop) <= row.ci_high
    assert hits >= 18


def test_cell_seed_is_pure():
    assert h.cell_seed(42, 200, "complete") == h.cell_seed(42, 200, "complete")
    assert len({h.cell_seed(42, n, t) for n in (5, 6) for t in ("a", "b")}) == 4
    assert 0 <= h.cell_seed(2**64 - 1, 10**6, "x") < 2**64


def test_run_sweep_order_and_outputs():
    cfg = h.parse_config(CONFIG)
    rows = h.run_sweep(cfg)
    assert [(r.n, r.target) for r in rows] == [
        (n, t) for _ in range(2) for n in (4, 5) for t in ("has_empty_square", "connected", "missing_edges")
    ]
    assert [r.p for r in rows[6:9]] == [0.5] * 3 and rows[9].p == 0.4
    assert h.run_sweep(cfg, workers=2) == rows
    text = h.rows_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(h.CSV_FIELDS)
    assert len(lines) == 13
    first = lines[1].split(",")
    assert first[h.CSV_FIELDS.index("closed_form")] == "" and first[h.CSV_FIELDS.index("z_score")] == ""
    stat_line = lines[3].split(",")
    assert stat_line[h.CSV_FIELDS.index("successes")] == ""
    data = json.loads(h.rows_to_json(rows))
    assert len(data) == 12 and set(h.CSV_FIELDS) <= set(data[0])
    assert data[2]["closed_form"] == 3.0


def test_run_sweep_domination_regime():
    cfg = h.ExperimentConfig([50, 100], [h.Schedule("constant", (0.5,))], 100, 42, ["has_domination_pair"])
    assert all(r.successes == 0 for r in h.run_sweep(cfg))


def test_default_workers(monkeypatch):
    import os

    monkeypatch.setenv("RGG_THREADS", "3")
    assert h.default_workers() == 3
    monkeypatch.setenv("RGG_THREADS", "0")
    assert h.default_workers() == (os.cpu_count() or 1)
    monkeypatch.delenv("RGG_THREADS")
    assert h.default_workers() == (os.cpu_count() or 1)
