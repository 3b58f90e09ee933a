"""Brute-force expectations and probabilities over all labeled graphs.

Every statistic is evaluated on each of the 2^C(n,2) graphs straight from
its definition (ordered 4-tuples, ordered vertex pairs, explicit (S, T)
splits), vectorized over graph codes with numpy.  Results are reduced to a
census indexed by edge count, so an expectation at any p is a single
polynomial evaluation: sum_k census[k] p^k (1-p)^(m-k).  Passing a
``Fraction`` for p gives the exact rational value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .graph import MAX_ENUMERATION_N, edge_index

STATISTICS = (
    "missing_edges",
    "square_tuples",
    "square_tuples_squared",
    "domination_pairs",
    "separating_witnesses",
)
PREDICATES = (
    "has_empty_square",
    "has_domination_pair",
    "star_two_connected",
    "connected",
    "complement_connected",
    "complete",
)

CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleQuery:
    n: int
    p: object
    target: str

    def __post_init__(self):
        _check_n(self.n)
        if self.target not in STATISTICS and self.target not in PREDICATES:
            raise ValueError(f"unknown oracle target {self.target!r}")


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"oracle enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got n={n}")


def adjacency_block(n: int, codes: np.ndarray) -> np.ndarray:
    """Boolean adjacency tensors, shape (len(codes), n, n)."""
    m = n * (n - 1) // 2
    bits = ((codes[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool)
    adj = np.zeros((len(codes), n, n), dtype=bool)
    if m:
        iu, ju = np.triu_indices(n, 1)
        adj[:, iu, ju] = bits
        adj[:, ju, iu] = bits
    return adj


def _popcount(codes: np.ndarray) -> np.ndarray:
    out = np.zeros(len(codes), dtype=np.int64)
    c = codes.copy()
    while c.any():
        out += c & 1
        c >>= 1
    return out


def _square_tuples(n, adj):
    x = np.zeros(adj.shape[0], dtype=np.int64)
    for v1, v2, w1, w2 in permutations(range(n), 4):
        x += (
            adj[:, v1, w1] & adj[:, v1, w2] & adj[:, v2, w1] & adj[:, v2, w2]
            & ~adj[:, v1, v2] & ~adj[:, w1, w2]
        )
    return x


def _domination_pairs(n, adj):
    x = np.zeros(adj.shape[0], dtype=np.int64)
    for v in range(n):
        for w in range(n):
            if v == w:
                continue
            others = [u for u in range(n) if u not in (v, w)]
            if not others:
                x += 1
                continue
            ok = ~adj[:, v, others] | adj[:, w, others]
            x += ok.all(axis=1)
    return x


@lru_cache(maxsize=None)
def _cross_mask(n: int, s_mask: int, t_mask: int) -> int:
    mask = 0
    for a in range(n):
        if s_mask >> a & 1:
            for b in range(n):
                if t_mask >> b & 1:
                    mask |= 1 << edge_index(n, a, b)
    return mask


def _separating_witnesses(n, codes, adj):
    """Count (v, L, S, T) with L = lk(v) and no S-T edge, directly."""
    y = np.zeros(len(codes), dtype=np.int64)
    weights = 1 << np.arange(n, dtype=np.int64)
    for v in range(n):
        others = [u for u in range(n) if u != v]
        # bitmask of vertices outside st(v), per graph
        rest = ((~adj[:, v, :]).astype(np.int64) * weights).sum(axis=1) & ~(1 << v)
        # every 3-colouring of the other vertices into L / S / T
        for k in range(len(others) + 1):
            for st_vertices in combinations(others, k):
                r_mask = sum(1 << u for u in st_vertices)
                sel = rest == r_mask
                if not sel.any():
                    continue
                sub = codes[sel]
                hits = np.zeros(len(sub), dtype=np.int64)
                for s_size in range(1, k):
                    for s_vertices in combinations(st_vertices, s_size):
                        s_mask = sum(1 << u for u in s_vertices)
                        cross = _cross_mask(n, s_mask, r_mask & ~s_mask)
                        hits += (sub & cross) == 0
                y[sel] += hits
    return y


def _connected(n, adj):
    if n <= 1:
        return np.ones(adj.shape[0], dtype=bool)
    reach = adj | np.eye(n, dtype=bool)
    for _ in range(n.bit_length() + 1):
        r = reach.astype(np.uint8)
        reach = np.matmul(r, r) > 0
    return reach[:, 0, :].all(axis=1)


def _evaluate(n: int, target: str, codes: np.ndarray) -> np.ndarray:
    m = n * (n - 1) // 2
    adj = adjacency_block(n, codes)
    if target == "missing_edges":
        return m - _popcount(codes)
    if target == "square_tuples":
        return _square_tuples(n, adj)
    if target == "square_tuples_squared":
        return _square_tuples(n, adj) ** 2
    if target == "domination_pairs":
        return _domination_pairs(n, adj)
    if target == "separating_witnesses":
        return _separating_witnesses(n, codes, adj)
    if target == "has_empty_square":
        return _square_tuples(n, adj) > 0
    if target == "has_domination_pair":
        return _domination_pairs(n, adj) > 0
    if target == "star_two_connected":
        return _separating_witnesses(n, codes, adj) == 0
    if target == "connected":
        return _connected(n, adj)
    if target == "complement_connected":
        comp = ~adj & ~np.eye(n, dtype=bool)
        return _connected(n, comp)
    if target == "complete":
        return _popcount(codes) == m
    raise ValueError(f"unknown oracle target {target!r}")


def statistic_values(n: int, target: str, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Per-graph values of ``target`` for codes in [start, stop)."""
    _check_n(n)
    m = n * (n - 1) // 2
    stop = (1 << m) if stop is None else stop
    parts = []
    for lo in range(start, stop, CHUNK):
        codes = np.arange(lo, min(stop, lo + CHUNK), dtype=np.int64)
        parts.append(np.asarray(_evaluate(n, target, codes), dtype=np.int64))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


@lru_cache(maxsize=None)
def census(n: int, target: str) -> tuple[int, ...]:
    """census[k] = sum of ``target`` over graphs with exactly k edges."""
    _check_n(n)
    m = n * (n - 1) // 2
    totals = [0] * (m + 1)
    for lo in range(0, 1 << m, CHUNK):
        codes = np.arange(lo, min(1 << m, lo + CHUNK), dtype=np.int64)
        vals = np.asarray(_evaluate(n, target, codes), dtype=np.int64)
        counts = np.zeros(m + 1, dtype=np.int64)
        np.add.at(counts, _popcount(codes), vals)
        for k in range(m + 1):
            totals[k] += int(counts[k])
    return tuple(totals)


def _weighted(n: int, p, totals) -> object:
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} is outside [0, 1]")
    m = n * (n - 1) // 2
    q = 1 - p
    if isinstance(p, float):
        return math.fsum(c * p**k * q ** (m - k) for k, c in enumerate(totals) if c)
    return sum(c * p**k * q ** (m - k) for k, c in enumerate(totals) if c)


def exact_expectation(q: OracleQuery):
    if q.target not in STATISTICS:
        raise ValueError(f"{q.target!r} is a predicate; use exact_probability")
    return _weighted(q.n, q.p, census(q.n, q.target))


def exact_probability(q: OracleQuery):
    if q.target not in PREDICATES:
        raise ValueError(f"{q.target!r} is a statistic; use exact_expectation")
    return _weighted(q.n, q.p, census(q.n, q.target))


def expectation(n: int, p, target: str):
    return exact_expectation(OracleQuery(n, p, target))


def probability(n: int, p, target: str):
    return exact_probability(OracleQuery(n, p, target))

