"""Closed forms checked against exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from . import moments, oracle

TOLERANCE = 1e-10

# closed form and the oracle statistic it must reproduce
FORMULAS = {
    "expected_missing_edges": (moments.expected_missing_edges, "missing_edges"),
    "expected_square_tuples": (moments.expected_square_tuples, "square_tuples"),
    "square_second_moment": (lambda n, p: moments.square_second_moment(n, p).second_moment, "square_tuples_squared"),
    "expected_domination_pairs": (moments.expected_domination_pairs, "domination_pairs"),
    "expected_separating_witnesses": (moments.expected_separating_witnesses, "separating_witnesses"),
}
SQUARE_FORMULAS = ("expected_square_tuples", "square_second_moment")


@dataclass(frozen=True)
class CheckRow:
    formula: str
    n: int
    p: float
    closed_form: float
    exact: float
    abs_error: float

    @property
    def passed(self) -> bool:
        return self.abs_error <= TOLERANCE


def default_grid() -> list[tuple[str, int, float]]:
    """n in {4, 5} for every formula, plus n = 6 for the square statistics."""
    grid = []
    for p in (0.2, 0.5, 0.8):
        for name in FORMULAS:
            for n in (4, 5):
                grid.append((name, n, p))
            if name in SQUARE_FORMULAS:
                grid.append((name, 6, p))
    return grid


def check(name: str, n: int, p: float) -> CheckRow:
    closed, target = FORMULAS[name]
    c = float(closed(n, p))
    e = float(oracle.expectation(n, p, target))
    return CheckRow(name, n, p, c, e, abs(c - e))


def run_oracle_suite(n_values=None, p_values=None) -> list[CheckRow]:
    if n_values is None and p_values is None:
        grid = default_grid()
    else:
        ns = list(n_values) if n_values is not None else [4, 5]
        ps = list(p_values) if p_values is not None else [0.2, 0.5, 0.8]
        grid = [(name, n, p) for p in ps for name in FORMULAS for n in ns]
    return [check(name, n, p) for name, n, p in grid]


def summarize(rows: list[CheckRow]) -> dict[str, float]:
    """Max absolute error per formula."""
    worst: dict[str, float] = {}
    for r in rows:
        worst[r.formula] = max(worst.get(r.formula, 0.0), r.abs_error)
    return worst
