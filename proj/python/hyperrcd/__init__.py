"""Ollivier-Ricci curvature, Ricci flow and community detection on weighted
hypergraphs.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    Hypergraph,
    HyperRCDError,
    curvature,
    detect,
    generate,
    load_hypergraph,
    load_labels,
    nmi,
    pair_w1,
    run_flow,
    sssp,
    validate,
    vertex_measure,
    __version__,
)

__all__ = [
    "Hypergraph",
    "HyperRCDError",
    "curvature",
    "detect",
    "generate",
    "load_hypergraph",
    "load_labels",
    "nmi",
    "pair_w1",
    "run_flow",
    "sssp",
    "validate",
    "vertex_measure",
    "__version__",
]
