"""Antidirected subgraph toolkit: oriented graphs, antiwalks, antimatchings,
tree decompositions, gadgets and exact embedding search."""

import json as _json

from ._antikit import (
    AntikitError,
    OrientedGraph,
    beta_decompose,
    blowup,
    build_antisubdivision,
    burr_graph,
    degree_profile,
    directed_triangle,
    embed_exact,
    find_antimatching,
    four_copy,
    is_antidirected,
    is_antiwalk,
    longest_antipath,
    oracle_max_antimatching,
    oriented_classes,
    oriented_count,
    pack,
    peel_pseudo,
    reach_from,
    transitive_tournament,
)
from ._antikit import verify as _verify


def verify(statement, n_range=(), k_range=(), samples=0, seed=0, iso=False, workers=0):
    """Run a verification job; returns the report as a dict."""
    return _json.loads(_verify(statement, list(n_range), list(k_range), samples, seed, iso, workers))


__all__ = [
    "AntikitError",
    "OrientedGraph",
    "beta_decompose",
    "blowup",
    "build_antisubdivision",
    "burr_graph",
    "degree_profile",
    "directed_triangle",
    "embed_exact",
    "find_antimatching",
    "four_copy",
    "is_antidirected",
    "is_antiwalk",
    "longest_antipath",
    "oracle_max_antimatching",
    "oriented_classes",
    "oriented_count",
    "pack",
    "peel_pseudo",
    "reach_from",
    "transitive_tournament",
    "verify",
]
