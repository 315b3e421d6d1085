"""
The 'exactmat' package provides exact linear algebra over prime fields.

Every Hom, Ext and approximation computation in `nfoldlib` reduces to row reduction modulo a prime.
Matrices are plain ``numpy.int64`` arrays whose entries lie in ``[0, p)``.

Main Features:
    - Prime field validation and scalar inverses (PrimeField).
    - Reduced row echelon form with rank and pivots (rref, rank, row_space).
    - Canonical null space bases (kernel_basis).
    - Canonical particular solutions of linear systems (solve).
"""
from .field import PrimeField
from .rref import rref
from .rref import rank
from .rref import row_space
from .kernel_basis import kernel_basis
from .solve import solve
