"""Exact computations with wreath Hecke algebras H_n(G) over finite fields."""

from .scalars import FieldSpec
from .groups import FiniteGroup, build_group, irreps, splitting_field
from .wreath import WreathElement, jucys_murphy, p_regular_type_count, class_count_series
from .hecke import HeckeAlgebra, HeckeElement, PolyModule, c_scalars, normal_mul
from .cyclotomic import CycloAlgebra, CycloWeight
from .repmod import MatrixModule, MoritaData, branch_verify, functor_F, functor_G
from .crystal import build_crystal, crystal_vs_branching

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "FiniteGroup", "build_group", "irreps", "splitting_field",
    "WreathElement", "jucys_murphy", "p_regular_type_count", "class_count_series",
    "HeckeAlgebra", "HeckeElement", "PolyModule", "c_scalars", "normal_mul",
    "CycloAlgebra", "CycloWeight", "MatrixModule", "MoritaData", "branch_verify",
    "functor_F", "functor_G", "build_crystal", "crystal_vs_branching",
]
