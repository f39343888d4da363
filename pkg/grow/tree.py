"""
Tree of quantum groups grown out of A_1.
"""

import logging
import re
from typing import Optional, Tuple

import networkx as nx

from config import settings

from .growth import GrowthError, extended_cartan

logger = logging.getLogger(__name__)

VERIFIED = "verified"
CITED = "cited"

# rep tag, target series, smallest n
GROWTH_EDGES: Tuple[Tuple[str, str, int], ...] = (
    ("vector", "B", 2),
    ("sym2", "C", 2),
    ("wedge2", "D", 4),
)

_SERIES_ORDER = "ABCDEFG"


def node_key(name: str) -> Tuple[int, int]:
    """Sort key (series, rank) for node names like "B3"."""
    match = re.fullmatch(r"([A-G])(\d+)", name)
    if not match:
        raise ValueError(f"Not a node name: '{name}'")
    return _SERIES_ORDER.index(match.group(1)), int(match.group(2))


def build_tree(max_rank: int, include_cited: Optional[bool] = None) -> nx.DiGraph:
    """
    Directed growth tree up to a rank.

    Each B/C/D edge A_{n-1} -> X_n is re-derived through extended_cartan and
    marked verified when the result equals the reference matrix. Rank
    induction edges A_{n-1} -> A_n are only cited.

    Args:
        max_rank: Largest rank of a target node; 1 gives the lone node A1
        include_cited: Emit cited edges, settings.TREE_INCLUDE_CITED by default

    Raises:
        ValueError: If max_rank < 1
    """
    if max_rank < 1:
        raise ValueError(f"max_rank must be at least 1, got {max_rank}")
    include_cited = settings.TREE_INCLUDE_CITED if include_cited is None else include_cited
    graph = nx.DiGraph()
    graph.add_node("A1", series="A", rank=1)
    for n in range(2, max_rank + 1):
        source = f"A{n - 1}"
        for tag, series, min_n in GROWTH_EDGES:
            if n < min_n:
                continue
            target = f"{series}{n}"
            try:
                result = extended_cartan(tag, n)
            except GrowthError as e:
                logger.warning("Edge %s -> %s via %s not derivable: %s", source, target, tag, e)
                continue
            if not result.matches_reference:
                logger.warning("Edge %s -> %s via %s does not reproduce %s", source, target, tag, target)
                continue
            graph.add_node(source, series="A", rank=n - 1)
            graph.add_node(target, series=series, rank=n)
            graph.add_edge(source, target, rep=tag, lam=str(result.lam), status=VERIFIED)
        if include_cited:
            graph.add_node(f"A{n}", series="A", rank=n)
            graph.add_edge(source, f"A{n}", rep="rank induction", lam="", status=CITED)
    logger.info("Growth tree up to rank %d: %d nodes, %d edges",
                max_rank, graph.number_of_nodes(), graph.number_of_edges())
    return graph


def sorted_nodes(graph: nx.DiGraph):
    return sorted(graph.nodes, key=node_key)


def sorted_edges(graph: nx.DiGraph):
    return sorted(graph.edges(data=True), key=lambda e: (node_key(e[0]), node_key(e[1])))
