"""Exact Hochschild cohomology of truncated cycle algebras.

Computes HH^*(K Z_e / J^N) over Q or F_p together with its cup product,
Gerstenhaber bracket and Batalin-Vilkovisky operator, all in exact
arithmetic, and cross-checks every closed formula against chain-level
computations.
"""

from .fields import Field, QQ, field_from_descriptor
from .algebra import AlgebraParams
from .cohomology import HHBasisElement, HHClass, HochschildCohomology

__all__ = [
    "Field", "QQ", "field_from_descriptor",
    "AlgebraParams",
    "HHBasisElement", "HHClass", "HochschildCohomology",
]
