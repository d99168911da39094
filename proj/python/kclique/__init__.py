"""Exact k-clique counting over degree- or core-ordered DAGs."""

from ._core import (
    CacheFormatError,
    CountOverflowError,
    Graph,
    GraphParseError,
    SizeGuardError,
    brute_force_count,
    complete_graph,
    count_cliques,
    er_graph,
    from_edges,
    load_graph,
    max_out_degree,
    powerlaw_graph,
    save_cache,
    validate,
    work_model,
)

__all__ = [
    "CacheFormatError",
    "CountOverflowError",
    "Graph",
    "GraphParseError",
    "SizeGuardError",
    "brute_force_count",
    "complete_graph",
    "count_cliques",
    "er_graph",
    "from_edges",
    "load_graph",
    "max_out_degree",
    "powerlaw_graph",
    "save_cache",
    "validate",
    "work_model",
]

__version__ = "1.0.0"
