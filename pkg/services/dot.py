"""
DOT rendering of growth trees and Dynkin diagrams.
"""

import logging
from typing import List, Sequence

import networkx as nx

from grow import CITED, sorted_edges, sorted_nodes
from lattice import dynkin_edges

logger = logging.getLogger(__name__)


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def tree_to_dot(graph: nx.DiGraph) -> str:
    """Growth tree; edges labeled with the representation and lambda."""
    lines: List[str] = ["digraph growth {", "  rankdir=LR;"]
    for node in sorted_nodes(graph):
        lines.append(f"  {_quote(node)};")
    for source, target, data in sorted_edges(graph):
        if data["status"] == CITED:
            label = f"{data['rep']}, cited"
            style = ", style=dashed"
        else:
            label = f"{data['rep']}, λ={data['lam']}"
            style = ""
        lines.append(f"  {_quote(source)} -> {_quote(target)} [label={_quote(label)}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dynkin_to_dot(cartan: Sequence[Sequence[int]], name: str = "dynkin") -> str:
    """
    Dynkin diagram of a Cartan matrix.

    Nodes are 1-based simple indices. Multi-laced edges become arrows toward
    the short root with the multiplicity in the label.
    """
    lines: List[str] = [f"graph {name} {{"]
    for i in range(len(cartan)):
        lines.append(f"  {i + 1};")
    for i, j, multiplicity, short in dynkin_edges(cartan):
        if short is None:
            lines.append(f"  {i + 1} -- {j + 1};")
            continue
        long_node = j if short == i else i
        lines.append(
            f"  {long_node + 1} -- {short + 1} [dir=forward, label={_quote(f'x{multiplicity}')}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(target, name: str = "dynkin") -> str:
    """DOT text for a growth tree (networkx graph) or a Cartan matrix."""
    if isinstance(target, nx.DiGraph):
        return tree_to_dot(target)
    return dynkin_to_dot(target, name)
