"""Erdos-Renyi G(n, p): seeded sampling, probability mass, regime diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class GnpParams:
    n: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} is outside [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class RegimeStats:
    pn: float
    q_n2: float
    transvection_margin: float


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Philox stream for one trial, keyed on (seed, trial_index) only."""
    if trial_index < 0:
        raise ValueError("trial_index must be nonnegative")
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,))
    return np.random.Generator(np.random.Philox(ss))


def sample_edge_bits(params: GnpParams, trial_index: int) -> np.ndarray:
    """Edge indicators in lexicographic pair order, one uniform per pair."""
    m = params.n * (params.n - 1) // 2
    return trial_rng(params.seed, trial_index).random(m) < params.p


def sample_matrix(params: GnpParams, trial_index: int) -> np.ndarray:
    n = params.n
    adj = np.zeros((n, n), dtype=bool)
    iu, ju = np.triu_indices(n, 1)
    bits = sample_edge_bits(params, trial_index)
    adj[iu, ju] = bits
    adj[ju, iu] = bits
    return adj


def graph_from_matrix(adj: np.ndarray) -> Graph:
    n = adj.shape[0]
    if n == 0:
        return Graph._trusted(0, ())
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
    return Graph._trusted(n, rows)


def sample(params: GnpParams, trial_index: int) -> Graph:
    return graph_from_matrix(sample_matrix(params, trial_index))


def _check_p(p: float) -> None:
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} is outside [0, 1]")


def graph_log_mass(g: Graph, p: float) -> float:
    """log P(g) under G(n, p); requires 0 < p < 1."""
    _check_p(p)
    if p in (0, 1):
        raise ValueError("log-mass needs 0 < p < 1; use graph_mass at the endpoints")
    e = g.edge_count
    total = g.n * (g.n - 1) // 2
    return e * math.log(p) + (total - e) * math.log1p(-p)


def graph_mass(g: Graph, p):
    """P(g) = p^E (1-p)^(C(n,2)-E).  Exact when p is a Fraction."""
    _check_p(p)
    e = g.edge_count
    total = g.n * (g.n - 1) // 2
    return p**e * (1 - p) ** (total - e)


def regime_stats(n: int, p: float) -> RegimeStats:
    if n < 1:
        raise ValueError("regime statistics need n >= 1")
    return RegimeStats(
        pn=p * n,
        q_n2=(1 - p) * n * n,
        transvection_margin=p * (1 - p) * n - 2 * math.log(n),
    )
