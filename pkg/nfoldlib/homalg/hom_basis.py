import numpy as np

from nfoldlib.exactmat import solve
from .module_map import ModuleMap


class HomSpace:
    """
    A basis of Hom(source, target).

    Attributes
    ----------
    source, target : Representation
    vectors : ndarray
        One row per basis element, in the flat coordinates of ``Representation.hom_vectors``.
    offsets : list of int
        Vertex blocks of the flat coordinates.
    """

    def __init__(self, source, target):
        self.source = source
        self.target = target
        self.vectors, self.offsets = source.hom_vectors(target)

    @property
    def dim(self):
        return self.vectors.shape[0]

    def __len__(self):
        return self.dim

    @property
    def basis(self):
        return [ModuleMap.from_vector(self.source, self.target, v, self.offsets) for v in self.vectors]

    def element(self, coeffs):
        """The combination of basis elements with the given coefficients."""
        vector = (np.asarray(coeffs, dtype=np.int64) @ self.vectors) % self.source.p
        return ModuleMap.from_vector(self.source, self.target, vector, self.offsets)

    def coordinates(self, f):
        """Coefficients of `f` in the basis, or None when `f` is not a homomorphism source -> target."""
        return solve(self.vectors.T, f.flat(), self.source.p)


def hom_basis(M, N):
    """
    Basis of Hom(M, N) from the null space of the stacked commutation system.

    Parameters
    ----------
    M, N : Representation
        Modules over the same algebra.

    Returns
    -------
    HomSpace

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``: ``hom_basis(P2, S2).dim == 1`` and
    ``hom_basis(S2, S3).dim == 0``.
    """
    return HomSpace(M, N)
