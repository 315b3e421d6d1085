import numpy as np

from .representation import Representation


def quotient(M, S):
    r"""
    Quotient module :math:`M / S`.

    At each vertex the quotient keeps the coordinates that are not pivot columns of the echelon basis of `S`;
    a vector is projected by first subtracting its component along `S`.

    Parameters
    ----------
    M : Representation
        The module.
    S : Submodule
        An arrow-stable submodule of `M`.

    Returns
    -------
    Representation
        Dimension vector ``M.dims - S.dims``.

    Raises
    ------
    ValueError
        If `S` is not a submodule of `M` or is not arrow-stable.
    """
    if S.parent is not M and S.parent != M:
        raise ValueError("submodule belongs to another module")
    if not S.is_stable():
        raise ValueError("quotient by an arrow-unstable subspace family")
    proj = projection_matrices(S)
    A = M.algebra
    maps = {}
    for a in A.arrows:
        s, t = A.vertex_index(a.source), A.vertex_index(a.target)
        section = proj[s][1]
        maps[a.name] = (proj[t][0] @ M.maps[a.name] @ section) % M.p
    return Representation(A, [b.shape[0] for b, _ in proj], maps, check=False)


def projection_matrices(S):
    """
    Per vertex, the projection ``M_v -> (M/S)_v`` and the coordinate section ``(M/S)_v -> M_v``.
    """
    p = S.parent.p
    result = []
    for basis, pivots, d in zip(S.bases, S.pivots, S.parent.dims):
        pivot_set = set(pivots)
        comp = [c for c in range(d) if c not in pivot_set]
        eye = np.eye(d, dtype=np.int64)
        e_comp = eye[comp]
        e_piv = eye[list(pivots)]
        proj = (e_comp - basis[:, comp].T @ e_piv) % p
        result.append((proj.reshape(len(comp), d), e_comp.T.reshape(d, len(comp)).copy()))
    return result


def submodule_representation(S):
    """
    The submodule `S` as a representation in the coordinates of its echelon bases.

    Returns
    -------
    module : Representation
    inclusion : list of ndarray
        Per vertex, the matrix ``S_v -> M_v`` (the transposed echelon basis).
    """
    M = S.parent
    A = M.algebra
    maps = {}
    for a in A.arrows:
        s, t = A.vertex_index(a.source), A.vertex_index(a.target)
        image = (S.bases[s] @ M.maps[a.name].T) % M.p
        maps[a.name] = image[:, S.pivots[t]].T.reshape(S.dims[t], S.dims[s])
    module = Representation(A, S.dims, maps, check=False)
    return module, [b.T.copy() for b in S.bases]
