"""Seeded Monte Carlo sweeps over (n, p) schedules.

Every trial graph is a pure function of (seed, trial index, n, p), so a
cell's counts do not depend on how its trials are scheduled.  Sweep cells
get their own seed derived from (config seed, n, target name).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from statistics import NormalDist
from typing import Callable, Optional

from . import detectors, moments
from .gnp import GnpParams, regime_stats, sample

Z95 = NormalDist().inv_cdf(0.975)


class ConfigError(ValueError):
    pass


# --- targets -----------------------------------------------------------------


def _out_finite_raag(g) -> bool:
    # cheaper domination scan first
    return not detectors.has_domination_pair(g) and detectors.is_star_two_connected(g)


PROPERTIES: dict[str, Callable] = {
    "has_empty_square": detectors.has_empty_square,
    "has_domination_pair": detectors.has_domination_pair,
    "star_two_connected": detectors.is_star_two_connected,
    "connected": lambda g: not detectors.split_predicates(g).graph_disconnected,
    "complement_connected": lambda g: not detectors.split_predicates(g).complement_disconnected,
    "complete": lambda g: g.edge_count == g.n * (g.n - 1) // 2,
    "out_finite_raag": _out_finite_raag,
}


def _square_tuples(g) -> int:
    return detectors.count_empty_squares(g).ordered_tuple_count


STATISTICS: dict[str, tuple[Callable, Callable]] = {
    # name -> (per-graph value, closed-form mean)
    "missing_edges": (lambda g: g.n * (g.n - 1) // 2 - g.edge_count, moments.expected_missing_edges),
    "square_tuples": (_square_tuples, moments.expected_square_tuples),
    "square_tuples_squared": (
        lambda g: _square_tuples(g) ** 2,
        lambda n, p: moments.square_second_moment(n, p).second_moment,
    ),
    "domination_pairs": (lambda g: detectors.domination_pairs(g).count, moments.expected_domination_pairs),
    "separating_witnesses": (detectors.separating_witness_count, moments.expected_separating_witnesses),
}


# --- p schedules ------------------------------------------------------------

SCHEDULE_ARITY = {"constant": 1, "inverse_n": 1, "power": 2, "one_minus_power": 2}


@dataclass(frozen=True)
class Schedule:
    """p as a function of n: constant c, c/n, c n^a, or 1 - c n^-b."""

    kind: str
    params: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in SCHEDULE_ARITY:
            raise ConfigError(f"unknown p schedule {self.kind!r}; choose from {sorted(SCHEDULE_ARITY)}")
        if len(self.params) != SCHEDULE_ARITY[self.kind]:
            raise ConfigError(f"schedule {self.kind!r} takes {SCHEDULE_ARITY[self.kind]} parameter(s)")
        if not all(math.isfinite(x) for x in self.params):
            raise ConfigError("schedule parameters must be finite")

    def raw(self, n: int) -> float:
        c = self.params[0]
        if self.kind == "constant":
            return c
        if self.kind == "inverse_n":
            return c / n
        if self.kind == "power":
            return c * n ** self.params[1]
        return 1 - c * n ** (-self.params[1])

    def __call__(self, n: int) -> float:
        return min(1.0, max(0.0, self.raw(n)))

    def label(self) -> str:
        return f"{self.kind}({', '.join(repr(x) for x in self.params)})"


# --- results ----------------------------------------------------------------


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    if trials <= 0:
        raise ValueError("trials must be positive")
    if not 0 <= successes <= trials:
        raise ValueError("successes must lie in [0, trials]")
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z / denom * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    low = 0.0 if successes == 0 else max(0.0, min(phat, center - half))
    high = 1.0 if successes == trials else min(1.0, max(phat, center + half))
    return low, high


@dataclass
class SweepRow:
    n: int
    p: float
    target: str
    kind: str
    trials: int
    estimate: float
    ci_low: float
    ci_high: float
    successes: Optional[int] = None
    closed_form: Optional[float] = None
    z_score: Optional[float] = None
    regime: dict = field(default_factory=dict)


CSV_FIELDS = ["n", "p", "target", "kind", "trials", "successes", "estimate", "ci_low", "ci_high", "closed_form", "z_score"]


def _regime(n: int, p: float) -> dict:
    return asdict(regime_stats(n, p)) if n >= 1 else {}


def estimate_property(n: int, p: float, trials: int, seed: int, prop: str) -> SweepRow:
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; choose from {sorted(PROPERTIES)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    params = GnpParams(n, p, seed)
    pred = PROPERTIES[prop]
    hits = sum(1 for t in range(trials) if pred(sample(params, t)))
    low, high = wilson_interval(hits, trials)
    return SweepRow(n, p, prop, "property", trials, hits / trials, low, high, successes=hits, regime=_regime(n, p))


def compare_statistic(n: int, p: float, trials: int, seed: int, stat: str) -> SweepRow:
    """Empirical mean of ``stat`` against its closed-form expectation."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}; choose from {sorted(STATISTICS)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    value, exact_mean = STATISTICS[stat]
    params = GnpParams(n, p, seed)
    vals = [value(sample(params, t)) for t in range(trials)]
    # integer sums keep the mean exact until the final division
    s1 = sum(vals)
    s2 = sum(v * v for v in vals)
    mean = s1 / trials
    var = (s2 - s1 * s1 / trials) / (trials - 1) if trials > 1 else 0.0
    se = math.sqrt(max(var, 0.0) / trials)
    exact = float(exact_mean(n, p))
    if se > 0:
        z = (mean - exact) / se
    else:
        z = 0.0 if math.isclose(mean, exact, rel_tol=1e-12, abs_tol=1e-12) else math.copysign(math.inf, mean - exact)
    return SweepRow(
        n, p, stat, "statistic", trials, mean, mean - Z95 * se, mean + Z95 * se,
        closed_form=exact, z_score=z, regime=_regime(n, p),
    )


# --- sweep configuration ------------------------------------------------------


@dataclass
class ExperimentConfig:
    n_values: list[int]
    schedules: list[Schedule]
    trials: int
    seed: int
    properties: list[str] = field(default_factory=list)
    statistics: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ConfigError("n_values must be a nonempty list of positive integers")
        if not self.schedules:
            raise ConfigError("at least one p schedule is required")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        for name in self.properties:
            if name not in PROPERTIES:
                raise ConfigError(f"unknown property {name!r}")
        for name in self.statistics:
            if name not in STATISTICS:
                raise ConfigError(f"unknown statistic {name!r}")
        if not self.properties and not self.statistics:
            raise ConfigError("config lists no properties and no statistics")


CONFIG_KEYS = {"n_values", "p_schedule", "p_param", "trials", "seed", "properties", "statistics"}


def _split(value: str, sep: str = ",") -> list[str]:
    return [tok.strip() for tok in value.split(sep) if tok.strip()]


def parse_config(text: str) -> ExperimentConfig:
    """Flat ``key = value`` lines; ``#`` starts a comment.

    ``p_schedule`` may list several schedules separated by ``;`` with the
    matching ``p_param`` groups separated the same way, e.g.::

        p_schedule = constant; one_minus_power
        p_param = 0.1; 1, 3
    """
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    for key in ("n_values", "p_schedule", "p_param", "trials", "seed"):
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
    try:
        n_values = [int(tok) for tok in _split(raw["n_values"])]
        kinds = _split(raw["p_schedule"], ";")
        groups = [[float(x) for x in _split(grp)] for grp in raw["p_param"].split(";")]
        trials = int(raw["trials"])
        seed = int(raw["seed"])
    except ValueError as exc:
        raise ConfigError(f"bad numeric value: {exc}") from None
    if len(kinds) != len(groups):
        raise ConfigError(f"{len(kinds)} schedules but {len(groups)} p_param groups")
    return ExperimentConfig(
        n_values=n_values,
        schedules=[Schedule(k, tuple(g)) for k, g in zip(kinds, groups)],
        trials=trials,
        seed=seed,
        properties=_split(raw.get("properties", "")),
        statistics=_split(raw.get("statistics", "")),
    )


def load_config(path) -> ExperimentConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None


def cell_seed(seed: int, n: int, target: str) -> int:
    digest = hashlib.blake2b(f"{seed}:{n}:{target}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def _run_cell(cell: tuple) -> SweepRow:
    kind, n, p, trials, seed, target = cell
    if kind == "property":
        return estimate_property(n, p, trials, seed, target)
    return compare_statistic(n, p, trials, seed, target)


def sweep_cells(config: ExperimentConfig) -> list[tuple]:
    cells = []
    for sched in config.schedules:
        for n in config.n_values:
            p = sched(n)
            for prop in config.properties:
                cells.append(("property", n, p, config.trials, cell_seed(config.seed, n, prop), prop))
            for stat in config.statistics:
                cells.append(("statistic", n, p, config.trials, cell_seed(config.seed, n, stat), stat))
    return cells


def default_workers() -> int:
    env = os.environ.get("RGG_THREADS", "").strip()
    try:
        cap = int(env) if env else 0
    except ValueError:
        cap = 0
    return cap if cap > 0 else (os.cpu_count() or 1)


def run_sweep(config: ExperimentConfig, workers: int = 1) -> list[SweepRow]:
    """Rows in deterministic order: schedule, then n, then properties, statistics."""
    cells = sweep_cells(config)
    if workers <= 1 or len(cells) <= 1:
        return [_run_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=min(workers, len(cells))) as pool:
        return list(pool.map(_run_cell, cells))


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow([_fmt(getattr(r, f)) for f in CSV_FIELDS])
    return buf.getvalue()


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def rows_to_json(rows: list[SweepRow]) -> str:
    out = []
    for r in rows:
        d = {f: _jsonable(getattr(r, f)) for f in CSV_FIELDS}
        d["regime"] = r.regime
        out.append(d)
    return json.dumps(out, indent=2) + "\n"
