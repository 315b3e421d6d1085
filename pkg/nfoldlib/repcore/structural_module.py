import numpy as np

from nfoldlib.quiverlang import opposite
from .representation import Representation


def structural_module(A, kind, v):
    r"""
    Indecomposable projective, injective or simple module at a vertex.

    Parameters
    ----------
    A : BoundQuiverAlgebra
        The algebra.
    kind : {'projective', 'injective', 'simple'}
        Which module to build.
    v : str
        Vertex id.

    Returns
    -------
    Representation
        :math:`P_v` is spanned by the basis paths starting at `v`, each placed at its end vertex, and an arrow
        acts by appending itself. :math:`I_v` is the vector-space dual of the projective at `v` over the
        opposite algebra. :math:`S_v` is one-dimensional at `v`.

    Raises
    ------
    ValueError
        On an unknown vertex or kind.

    Examples
    --------
    For ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the projective at 2 has dimension vector
    ``(1, 1, 0)``.
    """
    v = str(v)
    A.vertex_index(v)
    if kind == "projective":
        return path_module(A, v)
    if kind == "injective":
        return dual(path_module(opposite(A), v), A)
    if kind == "simple":
        dims = [1 if w == v else 0 for w in A.vertices]
        return Representation(A, dims)
    raise ValueError(f"unknown structural module kind {kind!r}")


def path_module(A, v):
    """The projective at `v` with its basis paths, ordered as in ``A.path_basis``."""
    paths = A.paths_from(v)
    at = {w: [q for q in paths if q.target == w] for w in A.vertices}
    position = {q: i for w in A.vertices for i, q in enumerate(at[w])}
    maps = {}
    for a in A.arrows:
        m = np.zeros((len(at[a.target]), len(at[a.source])), dtype=np.int64)
        for q in at[a.source]:
            ext = A.extend(q, a.name)
            if ext is not None:
                m[position[ext], position[q]] = 1
        maps[a.name] = m
    return Representation(A, [len(at[w]) for w in A.vertices], maps)


def dual(M, algebra=None):
    """
    Vector-space dual of `M`, a module over the opposite algebra.

    Each arrow matrix is transposed. `algebra` fixes the algebra of the result; it defaults to the opposite of
    ``M.algebra`` and must be structurally equal to it.
    """
    target = opposite(M.algebra) if algebra is None else algebra
    if target != opposite(M.algebra):
        raise ValueError("dual module lives over the opposite algebra")
    return Representation(target, M.dims, {k: m.T.copy() for k, m in M.maps.items()})
