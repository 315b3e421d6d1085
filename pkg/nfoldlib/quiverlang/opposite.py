import functools

from .quiver import Arrow, Quiver, BoundQuiverAlgebra


@functools.lru_cache(maxsize=None)
def opposite(A):
    """
    The opposite algebra: every arrow reversed, every relation read backwards.

    Vertex order and arrow names are kept, so ``opposite(opposite(A)) == A``.

    Examples
    --------
    With ``a : 3 -> 2``, ``b : 2 -> 1`` and relation ``a*b`` the opposite has ``a : 2 -> 3``, ``b : 1 -> 2``
    and relation ``b*a``.
    """
    quiver = Quiver(A.vertices, [Arrow(a.name, a.target, a.source) for a in A.arrows])
    relations = [tuple(reversed(rel)) for rel in A.relations]
    return BoundQuiverAlgebra(quiver, relations, A.p)
