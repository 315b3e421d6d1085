"""
The 'repcore' package holds modules over a bound quiver algebra as quiver representations.

Main Features:
    - Representations, their Hom systems and submodules (Representation, Submodule).
    - Projective, injective and simple modules, duality (structural_module, dual).
    - Direct sums (direct_sum, zero_module).
    - Submodule lattices and quotients (submodule_lattice, quotient, submodule_representation).
    - Isomorphism test and decomposition against a catalog of indecomposables (is_isomorphic, decompose).
"""
from .representation import Representation
from .representation import Submodule
from .structural_module import structural_module
from .structural_module import dual
from .direct_sum import direct_sum
from .direct_sum import zero_module
from .submodule_lattice import submodule_lattice
from .quotient import quotient
from .quotient import submodule_representation
from .is_isomorphic import is_isomorphic
from .decompose import decompose
