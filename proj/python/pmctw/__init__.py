"""Exact treewidth via minimal separators and potential maximal cliques.

Vertices are 0-indexed integers; vertex sets are sorted lists.
"""

from ._core import (
    Graph,
    OracleLimitError,
    ParseError,
    check_decomposition,
    connected_sets,
    count_bound,
    is_pmc,
    minimal_separators,
    oracle,
    parse_graph,
    pmcs,
    treewidth,
    treewidth_at_most,
    treewidth_polyspace,
    write_graph,
)

__all__ = [
    "Graph",
    "OracleLimitError",
    "ParseError",
    "check_decomposition",
    "connected_sets",
    "count_bound",
    "is_pmc",
    "minimal_separators",
    "oracle",
    "parse_graph",
    "pmcs",
    "treewidth",
    "treewidth_at_most",
    "treewidth_polyspace",
    "write_graph",
]
