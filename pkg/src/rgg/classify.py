"""Group-theoretic verdicts for a graph product G(Gamma, {G_v}).

Everything here is decided from graph predicates alone:

* all vertex groups finite: hyperbolic iff no empty square;
* any vertex groups: weakly hyperbolic relative to {G_v} iff no empty square;
* complete graph: the product is the direct product of the vertex groups;
* right-angled Artin group: free splitting iff the graph is disconnected,
  direct splitting iff the complement is disconnected, and Out finite iff
  there is neither a transvection (domination pair) nor a partial
  conjugation (separating star).

Verdicts that the available theory does not settle are reported as
``Tri.UNKNOWN`` rather than guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from . import detectors
from .graph import Graph


class Tri(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    cyclic: bool = True

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("vertex groups must be non-trivial (order >= 2)")

    def token(self) -> str:
        return f"{'z' if self.cyclic else 'f'}{self.order}"


@dataclass(frozen=True)
class InfiniteCyclic:
    def token(self) -> str:
        return "z"


@dataclass(frozen=True)
class GeneralFinitelyGenerated:
    def token(self) -> str:
        return "g"


VertexGroup = Union[FiniteGroup, InfiniteCyclic, GeneralFinitelyGenerated]


@dataclass(frozen=True)
class VertexGroupSpec:
    groups: tuple

    def __len__(self) -> int:
        return len(self.groups)

    @classmethod
    def all_order_two(cls, n: int) -> VertexGroupSpec:
        """Right-angled Coxeter group."""
        return cls((FiniteGroup(2),) * n)

    @classmethod
    def all_infinite_cyclic(cls, n: int) -> VertexGroupSpec:
        """Right-angled Artin group."""
        return cls((InfiniteCyclic(),) * n)

    @classmethod
    def parse(cls, text: str, n: int) -> VertexGroupSpec:
        """``coxeter``, ``artin``, or a comma list of per-vertex tokens.

        Tokens: ``z`` infinite cyclic, ``zK`` cyclic of order K, ``fK`` finite
        of order K (not known to be cyclic), ``g`` general finitely generated.
        """
        text = text.strip().lower()
        if text == "coxeter":
            return cls.all_order_two(n)
        if text == "artin":
            return cls.all_infinite_cyclic(n)
        groups = []
        for tok in (t.strip() for t in text.split(",") if t.strip()):
            if tok == "z":
                groups.append(InfiniteCyclic())
            elif tok == "g":
                groups.append(GeneralFinitelyGenerated())
            elif tok[0] in "zf" and tok[1:].isdigit():
                groups.append(FiniteGroup(int(tok[1:]), cyclic=tok[0] == "z"))
            else:
                raise ValueError(f"unknown vertex group token {tok!r}")
        if len(groups) != n:
            raise ValueError(f"spec lists {len(groups)} vertex groups for a graph on {n} vertices")
        return cls(tuple(groups))

    @property
    def all_finite(self) -> bool:
        return all(isinstance(g, FiniteGroup) for g in self.groups)

    @property
    def all_infinite_cyclic_groups(self) -> bool:
        return all(isinstance(g, InfiniteCyclic) for g in self.groups)

    @property
    def all_cyclic(self) -> bool:
        return all(
            isinstance(g, InfiniteCyclic) or (isinstance(g, FiniteGroup) and g.cyclic) for g in self.groups
        )

    @property
    def has_infinite_cyclic(self) -> bool:
        return any(isinstance(g, InfiniteCyclic) for g in self.groups)


@dataclass
class GroupVerdict:
    is_finite: Tri = Tri.UNKNOWN
    is_direct_product_of_vertex_groups: bool = False
    hyperbolic: Tri = Tri.UNKNOWN
    weakly_relatively_hyperbolic: bool = False
    raag_free_product_split: Optional[bool] = None
    raag_direct_product_split: Optional[bool] = None
    out_finite: Tri = Tri.UNKNOWN
    reasons: list[tuple[str, str]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "is_finite": self.is_finite.value,
            "is_direct_product_of_vertex_groups": self.is_direct_product_of_vertex_groups,
            "hyperbolic": self.hyperbolic.value,
            "weakly_relatively_hyperbolic": self.weakly_relatively_hyperbolic,
            "raag_free_product_split": self.raag_free_product_split,
            "raag_direct_product_split": self.raag_direct_product_split,
            "out_finite": self.out_finite.value,
            "reasons": [{"verdict": v, "rule": r} for v, r in self.reasons],
        }


def classify(g: Graph, spec: VertexGroupSpec, strict: bool = False) -> GroupVerdict:
    """Apply the verdict rules in order.

    With ``strict=True`` the finiteness rule for non-complete graphs (two
    non-adjacent non-trivial vertex groups generate their free product, an
    infinite group) is not used, so non-complete graphs with finite vertex
    groups report ``is_finite`` unknown.
    """
    if len(spec) != g.n:
        raise ValueError(f"spec has {len(spec)} vertex groups but the graph has {g.n} vertices")
    out = GroupVerdict()
    why = out.reasons
    splits = detectors.split_predicates(g)
    square = detectors.find_empty_square(g)

    # (i) complete graph
    if splits.graph_complete:
        out.is_direct_product_of_vertex_groups = True
        why.append(("is_direct_product_of_vertex_groups", "complete graph: every pair of vertex groups commutes"))
        if spec.all_finite:
            out.is_finite = Tri.YES
            why.append(("is_finite", "complete graph with finite vertex groups: finite direct product"))
    else:
        why.append(("is_direct_product_of_vertex_groups", "graph is not complete"))

    # (ii) hyperbolicity for finite vertex groups
    if spec.all_finite:
        out.hyperbolic = Tri.NO if square else Tri.YES
        why.append(
            ("hyperbolic", f"finite vertex groups: hyperbolic iff no empty square (square {square})"
             if square else "finite vertex groups: hyperbolic iff no empty square (none found)")
        )

    # (iii) weak relative hyperbolicity
    out.weakly_relatively_hyperbolic = square is None
    why.append(("weakly_relatively_hyperbolic", "weakly hyperbolic relative to vertex groups iff no empty square"))

    # (iv) splittings of the right-angled Artin group
    if spec.all_infinite_cyclic_groups:
        out.raag_free_product_split = splits.graph_disconnected
        out.raag_direct_product_split = splits.complement_disconnected
        why.append(("raag_free_product_split", "free product iff the graph is disconnected"))
        why.append(("raag_direct_product_split", "direct product iff the complement is disconnected"))

    # (v) outer automorphisms
    if spec.all_cyclic:
        dom = detectors.domination_pairs(g)
        seps = detectors.separating_stars(g)
        rigid = not dom.pairs and not seps.separators
        detail = (
            f"domination pair {dom.pairs[0]}" if dom.pairs
            else f"separating star at {min(seps.separators)}" if seps.separators
            else "no domination pairs and star 2-connected"
        )
        if rigid:
            out.out_finite = Tri.YES
            why.append(("out_finite", f"no transvections and no partial conjugations: {detail}"))
        elif spec.all_infinite_cyclic_groups:
            out.out_finite = Tri.NO
            why.append(("out_finite", f"infinite-order transvection or partial conjugation: {detail}"))
        else:
            why.append(("out_finite", f"unknown: {detail}; order restrictions for finite cyclic vertex groups"))
    else:
        why.append(("out_finite", "unknown: some vertex group is not cyclic"))

    # (vi) finiteness
    if spec.has_infinite_cyclic:
        out.is_finite = Tri.NO
        why.append(("is_finite", "an infinite cyclic vertex group embeds"))
    elif spec.all_finite and not splits.graph_complete and g.n >= 2 and not strict:
        out.is_finite = Tri.NO
        why.append(("is_finite", "extension: two non-adjacent non-trivial vertex groups generate an infinite free product"))
    return out
