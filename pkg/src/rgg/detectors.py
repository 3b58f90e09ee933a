"""Graph predicates behind the group-theoretic verdicts.

* empty squares (induced 4-cycles) decide hyperbolicity of graph products
  of finite groups;
* domination ``lk(v) <= st(w)`` is the condition for a transvection;
* a separating star (``G - st(v)`` disconnected) yields a partial conjugation;
* connectivity of the graph and of its complement decide free and direct
  product splittings of the right-angled Artin group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .graph import Graph, _bits, complement, component_masks, members


@dataclass(frozen=True)
class EmptySquareReport:
    unordered_count: int
    witness: Optional[tuple[int, int, int, int]] = None

    @property
    def ordered_tuple_count(self) -> int:
        # each square is hit by 8 ordered (v1, v2, w1, w2) tuples
        return 8 * self.unordered_count


@dataclass(frozen=True)
class DominationReport:
    pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class SeparatingStarReport:
    separators: frozenset[int]
    witness_partition: dict[int, tuple[frozenset[int], frozenset[int]]]


class SplitPredicates(NamedTuple):
    graph_disconnected: bool
    complement_disconnected: bool
    graph_complete: bool


def _diagonal_partners(g: Graph, a: int) -> int:
    """Vertices b > a at distance exactly two from a."""
    rows = g.rows
    row = rows[a]
    if row & (row - 1) == 0:
        return 0
    reach = 0
    for c in _bits(row):
        reach |= rows[c]
    return reach & ~row & ~((2 << a) - 1)


def _squares_on_diagonal(g: Graph, a: int, b: int) -> tuple[int, Optional[tuple[int, int]]]:
    """Empty squares having {a, b} as a diagonal pair (a, b non-adjacent).

    These are the non-adjacent pairs inside the common neighbourhood.
    """
    common = g.rows[a] & g.rows[b]
    if common & (common - 1) == 0:
        return 0, None
    count = 0
    first = None
    for c in _bits(common):
        higher = common & ~g.rows[c] & ~((2 << c) - 1)
        if higher:
            count += higher.bit_count()
            if first is None:
                first = (c, (higher & -higher).bit_length() - 1)
    return count, first


def count_empty_squares(g: Graph) -> EmptySquareReport:
    """Count induced 4-cycles, each once.

    Every square has exactly two diagonal pairs, so summing over
    non-adjacent pairs and halving counts each square once.
    """
    total = 0
    witness = None
    for a in range(g.n):
        for b in _bits(_diagonal_partners(g, a)):
            k, w = _squares_on_diagonal(g, a, b)
            if k:
                total += k
                if witness is None:
                    witness = (a, b, w[0], w[1])
    return EmptySquareReport(total // 2, witness)


def find_empty_square(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """One square as (v1, v2, w1, w2) with diagonals v1v2 and w1w2, or None."""
    for a in range(g.n):
        for b in _bits(_diagonal_partners(g, a)):
            common = g.rows[a] & g.rows[b]
            if common & (common - 1) == 0:
                continue
            for c in _bits(common):
                rest = common & ~g.rows[c] & ~(1 << c)
                if rest:
                    return (a, b, c, (rest & -rest).bit_length() - 1)
    return None


def has_empty_square(g: Graph) -> bool:
    return find_empty_square(g) is not None


def is_dominated(g: Graph, v: int, w: int) -> bool:
    """lk(v) is contained in st(w) (inclusive containment)."""
    return g.rows[v] & ~(g.rows[w] | 1 << w) == 0


def domination_pairs(g: Graph) -> DominationReport:
    rows = g.rows
    pairs = []
    for v in range(g.n):
        lv = rows[v]
        for w in range(g.n):
            if w != v and lv & ~(rows[w] | 1 << w) == 0:
                pairs.append((v, w))
    return DominationReport(pairs)


def has_domination_pair(g: Graph) -> bool:
    rows = g.rows
    degrees = [r.bit_count() for r in rows]
    for v in range(g.n):
        lv = rows[v]
        dv = degrees[v]
        for w in range(g.n):
            # lk(v) - {w} inside lk(w) forces deg(v) <= deg(w) + 1
            if w != v and dv <= degrees[w] + 1 and lv & ~(rows[w] | 1 << w) == 0:
                return True
    return False


def star_remainder_components(g: Graph, v: int) -> list[int]:
    """Component bitmasks of G - st(v)."""
    rest = g.vertex_mask & ~(g.rows[v] | 1 << v)
    return component_masks(g, rest)


def separating_stars(g: Graph) -> SeparatingStarReport:
    separators = []
    witnesses = {}
    for v in range(g.n):
        comps = star_remainder_components(g, v)
        if len(comps) >= 2:
            separators.append(v)
            rest = 0
            for c in comps[1:]:
                rest |= c
            witnesses[v] = (members(comps[0]), members(rest))
    return SeparatingStarReport(frozenset(separators), witnesses)


def has_separating_star(g: Graph) -> bool:
    return any(len(star_remainder_components(g, v)) >= 2 for v in range(g.n))


def is_star_two_connected(g: Graph) -> bool:
    return not has_separating_star(g)


def separating_witness_count(g: Graph) -> int:
    """Number of (v, S, T): S, T nonempty, S + T = G - st(v), no S-T edges.

    With c components in G - st(v) there are 2^c - 2 ordered splits.
    """
    total = 0
    for v in range(g.n):
        c = len(star_remainder_components(g, v))
        if c >= 2:
            total += (1 << c) - 2
    return total


def split_predicates(g: Graph) -> SplitPredicates:
    total = g.n * (g.n - 1) // 2
    return SplitPredicates(
        graph_disconnected=len(component_masks(g)) >= 2,
        complement_disconnected=len(component_masks(complement(g))) >= 2,
        graph_complete=g.edge_count == total,
    )


def analyze(g: Graph) -> dict:
    squares = count_empty_squares(g)
    dom = domination_pairs(g)
    seps = separating_stars(g)
    splits = split_predicates(g)
    return {
        "n": g.n,
        "edges": g.edge_count,
        "empty_squares": squares.unordered_count,
        "ordered_tuples": squares.ordered_tuple_count,
        "domination_pairs": [list(pr) for pr in dom.pairs],
        "separators": sorted(seps.separators),
        "graph_disconnected": splits.graph_disconnected,
        "complement_disconnected": splits.complement_disconnected,
        "complete": splits.graph_complete,
    }
