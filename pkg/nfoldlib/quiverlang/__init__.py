"""
The 'quiverlang' package reads algebra descriptions and builds bound quiver algebras.

A path ``a*b`` means "first a, then b". Relations are monomial, so the algebra is determined by its quiver and a
list of zero paths, and its basis is the set of residue paths.

Main Features:
    - Quivers, paths and bound quiver algebras with their path basis (Quiver, BoundQuiverAlgebra).
    - Parsing, serialization and bundled descriptions (parse_algebra, format_algebra, load_algebra).
    - Gate for the supported string-algebra class (validate_string_algebra).
    - Opposite algebras for duality (opposite).
    - Linearly oriented A_m and its radical-square-zero quotient (linear_a).
"""
from .quiver import Arrow
from .quiver import Path
from .quiver import Quiver
from .quiver import BoundQuiverAlgebra
from .parse_algebra import parse_algebra
from .parse_algebra import format_algebra
from .parse_algebra import load_algebra
from .parse_algebra import bundled_algebras
from .validate_string_algebra import validate_string_algebra
from .validate_string_algebra import StringAlgebraCertificate
from .opposite import opposite
from .linear_a import linear_a
