"""Exact (pre-asymptotic) moments of the square and automorphism statistics.

Square statistic X: the number of ordered 4-tuples (v1, v2, w1, w2) of
distinct vertices with the four sides v_i w_j present and both diagonals
v1v2, w1w2 absent.  E(X^2) is split by how two such tuples overlap; every
term is an exact falling factorial times p^a (1-p)^b.

Automorphism statistics: the number of ordered dominated pairs and the
number Y of separating-star witnesses (v, S, T).

Plain arithmetic is used wherever it cannot overflow, so passing a
``fractions.Fraction`` for p gives exact rational results.  The witness
sum, whose terms reach (1-p)^(n^2/4), is accumulated in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .gnp import regime_stats

ONE_OVER_SQRT2 = 1 / math.sqrt(2)
# y(p) > 0 exactly above this value
Y_THRESHOLD = 1 - ONE_OVER_SQRT2


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); zero when k > n, one when k == 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > n:
        return 0
    out = 1
    for i in range(n - k + 1, n + 1):
        out *= i
    return out


# (coefficient, vertices used, side exponent, diagonal exponent) per overlap
# pattern.  The three-shared-vertex pattern has coefficient 32: 4 choices of
# the unshared vertex of the first tuple times 8 placements in the second.
# Enumeration at n = 5, 6 confirms 32; the value 16 sometimes quoted is wrong.
SQUARE_CASES = (
    ("disjoint", 1, 8, 8, 4),
    ("one_shared_vertex", 16, 7, 8, 4),
    ("shared_diagonal", 8, 6, 8, 3),
    ("shared_side", 32, 6, 7, 4),
    ("three_shared_vertices", 32, 5, 6, 3),
    ("same_square", 8, 4, 4, 2),
)


@dataclass(frozen=True)
class SquareMoments:
    mean_ordered_tuples: float
    case_terms: tuple
    second_moment: float
    ratio: float

    def as_dict(self) -> dict:
        return {
            "mean_ordered_tuples": float(self.mean_ordered_tuples),
            "case_terms": {name: float(t) for (name, *_), t in zip(SQUARE_CASES, self.case_terms)},
            "second_moment": float(self.second_moment),
            "ratio": float(self.ratio),
        }


@dataclass(frozen=True)
class RatioExpansion:
    exact: float
    asymptotic: float
    asymptotic_terms: tuple[float, ...]


@dataclass(frozen=True)
class AutMoments:
    mean_domination_pairs: float
    mean_separating_witnesses: float
    separating_upper_bound: float
    x_value: float
    y_value: float


def expected_missing_edges(n: int, p):
    return comb(n, 2) * (1 - p)


def expected_square_tuples(n: int, p):
    return falling_factorial(n, 4) * p**4 * (1 - p) ** 2


def square_case_terms(n: int, p) -> tuple:
    q = 1 - p
    return tuple(
        coef * falling_factorial(n, k) * p**a * q**b for _, coef, k, a, b in SQUARE_CASES
    )


def square_second_moment(n: int, p) -> SquareMoments:
    if n < 0:
        raise ValueError("n must be nonnegative")
    mean = expected_square_tuples(n, p)
    terms = square_case_terms(n, p)
    second = sum(terms)
    ratio = second / mean**2 if mean else math.inf
    return SquareMoments(mean, terms, second, ratio)


def second_moment_ratio_terms(n: int, p: float) -> RatioExpansion:
    """Exact E(X^2)/E(X)^2 next to its leading-order six-term expansion."""
    if not 0 < p < 1:
        raise ValueError("the expansion needs 0 < p < 1")
    if n < 4:
        raise ValueError("the expansion needs n >= 4")
    q = 1 - p
    terms = (
        1.0,
        16 / n,
        8 / (n**2 * q),
        32 / (n**2 * p),
        32 / (n**3 * p**2 * q),
        8 / (n**4 * p**4 * q**2),
    )
    exact = square_second_moment(n, p).ratio
    return RatioExpansion(exact=float(exact), asymptotic=math.fsum(terms), asymptotic_terms=terms)


def expected_domination_pairs(n: int, p):
    if n < 2:
        return 0
    return n * (n - 1) * (1 - p + p * p) ** (n - 2)


def domination_pairs_binomial_sum(n: int, p):
    """n(n-1) sum_k C(n-2, k) p^(2k) (1-p)^(n-2-k), the unsummed form."""
    if n < 2:
        return 0
    q = 1 - p
    return n * (n - 1) * sum(comb(n - 2, k) * p ** (2 * k) * q ** (n - 2 - k) for k in range(n - 1))


def _log_comb(a: int, b: int) -> float:
    return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)


def _witness_log_terms(n: int, p: float):
    logp, logq = math.log(p), math.log1p(-p)
    for ell in range(n - 2):
        rest = n - 1 - ell
        base = _log_comb(n - 1, ell) + ell * logp + (n - ell - 1) * logq
        for s in range(1, rest):
            t = rest - s
            yield base + _log_comb(rest, s) + s * t * logq


def log_expected_separating_witnesses(n: int, p: float) -> float:
    """log E(Y); -inf when E(Y) = 0."""
    if n <= 2 or p >= 1:
        return -math.inf
    if p <= 0:
        # only the empty graph: every split of the other n-1 vertices works
        return math.log(n * (2 ** (n - 1) - 2))
    logs = list(_witness_log_terms(n, p))
    top = max(logs)
    return math.log(n) + top + math.log(math.fsum(math.exp(x - top) for x in logs))


def expected_separating_witnesses(n: int, p):
    """E(Y) = n sum_{l, s} C(n-1, l) C(n-1-l, s) p^l (1-p)^(n-l-1+st), s, t >= 1."""
    if n <= 2:
        return 0
    if not isinstance(p, float) and not isinstance(p, int):
        # exact rational path
        q = 1 - p
        total = 0
        for ell in range(n - 2):
            rest = n - 1 - ell
            for s in range(1, rest):
                total += comb(n - 1, ell) * comb(rest, s) * p**ell * q ** (n - ell - 1 + s * (rest - s))
        return n * total
    return math.exp(log_expected_separating_witnesses(n, float(p)))


def x_value(p):
    return p - p * p


def y_value(p):
    return (1 - p) - 2 * (1 - p) ** 3


def y_factored(p):
    """The factored cubic 2(p-1)(p-1-1/sqrt2)(p-1+1/sqrt2)."""
    return 2 * (p - 1) * (p - 1 - ONE_OVER_SQRT2) * (p - 1 + ONE_OVER_SQRT2)


def separating_upper_bound(n: int, p: float) -> tuple[float, float, float]:
    """(bound, x, y) with bound = 2n^2 (1-p)^-1 (1-x)^(n-1) + n (1-p)^-4 (1-y)^(n-1)."""
    if not 0 < p < 1:
        raise ValueError("the bound needs 0 < p < 1")
    q = 1 - p
    x = x_value(p)
    y = y_value(p)
    bound = 2 * n * n / q * (1 - x) ** (n - 1) + n / q**4 * (1 - y) ** (n - 1)
    return bound, x, y


def aut_moments(n: int, p: float) -> AutMoments:
    bound, x, y = separating_upper_bound(n, p)
    return AutMoments(
        mean_domination_pairs=float(expected_domination_pairs(n, p)),
        mean_separating_witnesses=float(expected_separating_witnesses(n, p)),
        separating_upper_bound=bound,
        x_value=x,
        y_value=y,
    )


def moments_report(n: int, p: float) -> dict:
    """Every closed-form quantity at (n, p), as plain JSON-ready values."""
    sq = square_second_moment(n, p)
    out = {
        "n": n,
        "p": p,
        "expected_missing_edges": float(expected_missing_edges(n, p)),
        "expected_square_tuples": float(sq.mean_ordered_tuples),
        "square_case_terms": sq.as_dict()["case_terms"],
        "square_second_moment": float(sq.second_moment),
        "square_ratio": None if math.isinf(sq.ratio) else float(sq.ratio),
        "expected_domination_pairs": float(expected_domination_pairs(n, p)),
        "expected_separating_witnesses": float(expected_separating_witnesses(n, p)),
        "x": x_value(p),
        "y": y_value(p),
    }
    if 0 < p < 1:
        out["separating_upper_bound"] = separating_upper_bound(n, p)[0]
        if n >= 4:
            exp = second_moment_ratio_terms(n, p)
            out["square_ratio_asymptotic"] = exp.asymptotic
    if n >= 1:
        rs = regime_stats(n, p)
        out["regime"] = {"pn": rs.pn, "q_n2": rs.q_n2, "transvection_margin": rs.transvection_margin}
    return out
