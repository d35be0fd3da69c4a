"""Enumerate maximal induced bicliques, with a fast path for near-bipartite graphs."""

from ._kernels import backend
from .bipartite import enumerate_bipartite_mibs
from .generator import GenParams, generate
from .graph import Biclique, Graph, is_induced_biclique, is_maximal_biclique
from .lexmib import dias_uncorrected, lexmib
from .mcb import mcb
from .mis import enumerate_mis
from .oct import OctDecomposition, decomposition_from_oct, greedy_oct
from .octmib import count_mibs, octmib
from .oracle import OracleSizeError, all_mibs

__all__ = [
    "Biclique",
    "GenParams",
    "Graph",
    "OctDecomposition",
    "OracleSizeError",
    "all_mibs",
    "backend",
    "count_mibs",
    "decomposition_from_oct",
    "dias_uncorrected",
    "enumerate_bipartite_mibs",
    "enumerate_mis",
    "generate",
    "greedy_oct",
    "is_induced_biclique",
    "is_maximal_biclique",
    "lexmib",
    "mcb",
    "octmib",
]
