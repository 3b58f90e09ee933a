"""Graph products over Erdos-Renyi random graphs.

Graph predicates (empty squares, domination, separating stars) decide
hyperbolicity and finiteness of outer automorphism groups; the moment,
oracle and harness modules check the threshold behaviour of those
predicates on G(n, p) exactly and by simulation.
"""

from .classify import GroupVerdict, Tri, VertexGroupSpec, classify
from .gnp import GnpParams, sample
from .graph import Graph, complete_graph, empty_graph, from_edge_list

__all__ = [
    "Graph", "GnpParams", "GroupVerdict", "Tri", "VertexGroupSpec",
    "classify", "complete_graph", "empty_graph", "from_edge_list", "sample",
]
