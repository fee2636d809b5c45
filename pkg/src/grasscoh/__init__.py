"""Exact cohomology of homogeneous vector bundles on the Grassmannian G(1,4)."""

from .bott import BottResult, CohRow, CohTable, Interval, coh_virtual, intermediate_support
from .expr import bundle, normalize, parse, pretty
from .les import Engine, MixedBundle, builtin_registry, coh_named, cohomology, ext_dim
from .virtual import VirtualBundle
from .weights import LeviWeight, rank_levi, weyl_dim

__all__ = [
    "BottResult",
    "CohRow",
    "CohTable",
    "Engine",
    "Interval",
    "LeviWeight",
    "MixedBundle",
    "VirtualBundle",
    "builtin_registry",
    "bundle",
    "coh_named",
    "coh_virtual",
    "cohomology",
    "ext_dim",
    "intermediate_support",
    "normalize",
    "parse",
    "pretty",
    "rank_levi",
    "weyl_dim",
]
