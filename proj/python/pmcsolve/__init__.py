"""Optimal induced subgraphs of bounded treewidth.

Vertices are 0-based here, unlike the command-line tool and the pace-gr format.
"""

from ._pmcsolve import (
    BudgetExceeded,
    Graph,
    ParseError,
    SizeLimitExceeded,
    Solution,
    Stats,
    brute_force_pmcs,
    brute_force_separators,
    catalog,
    generate,
    minimal_separators,
    parse_graph,
    pmcs,
    read_graph,
    solve,
    treewidth,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ParseError",
    "SizeLimitExceeded",
    "Solution",
    "Stats",
    "brute_force_pmcs",
    "brute_force_separators",
    "catalog",
    "generate",
    "minimal_separators",
    "parse_graph",
    "pmcs",
    "read_graph",
    "solve",
    "treewidth",
]
