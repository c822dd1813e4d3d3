"""Exact computer algebra for post-groups, pre-groups, Butcher groups,
Yang-Baxter solutions, skew braces and free post-Lie algebras."""
from __future__ import annotations

from .coeff import GF, QQ, PrimeField, TruncatedPoly, TruncatedPolyRing
from .trees import Forest, OrderedForest, PlanarTree, Tree, admissible_cuts, all_cuts, enumerate_trees, remove_cut

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "PrimeField",
    "TruncatedPoly",
    "TruncatedPolyRing",
    "Tree",
    "PlanarTree",
    "Forest",
    "OrderedForest",
    "enumerate_trees",
    "all_cuts",
    "admissible_cuts",
    "remove_cut",
]
