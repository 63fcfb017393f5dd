"""Group sum chromatic number of graphs with checkable labelling certificates."""

from .abelian import GroupSpec, enumerate_abelian_groups
from .constructions import can_label, certify, chi_sum_g, construct, label
from .graph import Graph, generate, parse_graph, write_graph
from .labelling import Certificate, EdgeLabelling, verify

__all__ = [
    "Certificate", "EdgeLabelling", "Graph", "GroupSpec", "can_label", "certify", "chi_sum_g",
    "construct", "enumerate_abelian_groups", "generate", "label", "parse_graph", "verify",
    "write_graph",
]
