from nfoldlib import constants
from .quiver import Arrow, Quiver, BoundQuiverAlgebra


def linear_a(m, radical_square_zero=False, p=constants.DEFAULT_PRIME):
    """
    Linearly oriented quiver ``m -> m-1 -> ... -> 1`` as a bound quiver algebra.

    Parameters
    ----------
    m : int
        Number of vertices, at least 1.
    radical_square_zero : bool, optional
        If True, every path of length 2 is a relation (the Nakayama algebra whose indecomposables are the
        projectives and simples). Otherwise the hereditary path algebra.
    p : int, optional
        Field modulus.

    Returns
    -------
    BoundQuiverAlgebra
        Arrow ``a<k>`` goes from vertex ``k+1`` to vertex ``k``.
    """
    if m < 1:
        raise ValueError(f"linear_a needs at least one vertex, got {m}")
    vertices = [str(v) for v in range(1, m + 1)]
    arrows = [Arrow(f"a{k}", str(k + 1), str(k)) for k in range(1, m)]
    relations = []
    if radical_square_zero:
        relations = [(f"a{k + 1}", f"a{k}") for k in range(1, m - 1)]
    return BoundQuiverAlgebra(Quiver(vertices, arrows), relations, p)
