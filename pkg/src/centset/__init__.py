"""Centralizer counts, CG-groups and related structure for finite groups.

Groups are dense Cayley tables (:class:`CayleyGroup`); every algorithm is
exact enumeration over the table.
"""

from .analysis import analyze, cent_count, center, centralizer, commutator_subgroup, is_ca, is_cg, omega
from .core import CayleyGroup, SubgroupSet, build_from_permutations, direct_product, semidirect_product
from .errors import CentsetError
from .families import FamilySpec, build_family
from .frobenius import decompose, frobenius_kernel, is_frobenius
from .isoclinism import are_isoclinic

__version__ = "0.1.0"

__all__ = [
    "CayleyGroup", "SubgroupSet", "CentsetError", "FamilySpec",
    "analyze", "are_isoclinic", "build_family", "build_from_permutations", "cent_count",
    "center", "centralizer", "commutator_subgroup", "decompose", "direct_product",
    "frobenius_kernel", "is_ca", "is_cg", "is_frobenius", "omega", "semidirect_product",
]
