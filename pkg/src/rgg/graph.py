"""Labeled simple graphs on vertices 0..n-1.

Adjacency is held as one neighbor bitmask per vertex.  The canonical
encoding of a graph is an integer ``code`` whose bit ``i`` is set when the
``i``-th pair in lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)`` is an
edge.  The sampler, the enumerator and the oracle all use this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

MAX_ENUMERATION_N = 7

VertexSet = frozenset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


@lru_cache(maxsize=None)
def edge_order(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs u < v in the fixed lexicographic order."""
    return tuple(combinations(range(n), 2))


def edge_index(n: int, u: int, v: int) -> int:
    """Position of the pair {u, v} in ``edge_order(n)``."""
    if u > v:
        u, v = v, u
    # pairs with first endpoint < u, then offset within row u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {v} references a vertex >= n={self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in canonical order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def code(self) -> int:
        code = 0
        for u, v in self.edges():
            code |= 1 << edge_index(self.n, u, v)
        return code

    @classmethod
    def from_code(cls, n: int, code: int) -> Graph:
        rows = [0] * n
        for i, (u, v) in enumerate(edge_order(n)):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # caller guarantees symmetric, loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def link_mask(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.rows[v]


def star_mask(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.rows[v] | (1 << v)


def link(g: Graph, v: int) -> VertexSet:
    return members(link_mask(g, v))


def star(g: Graph, v: int) -> VertexSet:
    return members(star_mask(g, v))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``; vertices are renumbered in increasing order.

    Returns the subgraph and the map old label -> new label.
    """
    kept = sorted(set(keep))
    for v in kept:
        _check_vertex(g, v)
    relabel = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in _bits(g.rows[v]):
            if u in relabel:
                row |= 1 << relabel[u]
        rows.append(row)
    return Graph._trusted(len(kept), tuple(rows)), relabel


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on the bitmask ``within``."""
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        frontier = remaining & -remaining
        comp = frontier
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= g.rows[u]
            frontier = reach & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by smallest member; the 0-vertex graph has none."""
    return [members(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    # 0- and 1-vertex graphs count as connected
    return len(component_masks(g)) <= 1


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in increasing ``code`` order."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_ENUMERATION_N:
        raise ValueError(
            f"refusing to enumerate graphs on n={n} > {MAX_ENUMERATION_N} vertices "
            f"(2^{n * (n - 1) // 2} graphs)"
        )
    for code in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_code(n, code)


# --- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"``.

    Endpoints may appear in either order and duplicate lines collapse.
    """
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    try:
        header = [int(tok) for tok in lines[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for toks in lines[1:]:
            if len(toks) != 2:
                raise ValueError
            edges.append((int(toks[0]), int(toks[1])))
    except ValueError:
        raise ValueError("malformed edge list: expected 'n m' then m lines 'u v'") from None
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges but {len(edges)} lines follow")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
