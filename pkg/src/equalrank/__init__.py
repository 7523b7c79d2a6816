"""Equal-rank restriction, GKRS multiplets and Dirac induction with exact arithmetic."""
from .chars import VirtualDecomposition, WeightMultiset, decompose_virtual, freudenthal_character, weyl_dimension
from .embed import Embedding, branch, build_embedding, spin_module
from .gkrs import dirac_induce, euler_restriction, gkrs_multiplet, induce_truncated, verify_adjointness
from .rootdata import RootSystem, build_root_system, weyl_elements

__all__ = [
    "Embedding",
    "RootSystem",
    "VirtualDecomposition",
    "WeightMultiset",
    "branch",
    "build_embedding",
    "build_root_system",
    "decompose_virtual",
    "dirac_induce",
    "euler_restriction",
    "freudenthal_character",
    "gkrs_multiplet",
    "induce_truncated",
    "spin_module",
    "verify_adjointness",
    "weyl_dimension",
    "weyl_elements",
]
