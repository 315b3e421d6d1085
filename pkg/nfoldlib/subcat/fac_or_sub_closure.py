import numpy as np

from nfoldlib.exactmat import rank
from nfoldlib.homalg import hom_basis
from .subcat import Subcat


def fac_or_sub_closure(C, side="fac"):
    """
    Fac or Sub of a subcategory.

    ``side='fac'`` keeps the indecomposables whose trace from the members is everything;
    ``side='sub'`` keeps those whose reject into the members is zero.

    Parameters
    ----------
    C : Subcat
        The subcategory.
    side : {'fac', 'sub'}

    Returns
    -------
    Subcat

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, Fac of add(P2) is add(S2+P2).
    """
    if side not in ("fac", "sub"):
        raise ValueError(f"unknown closure side {side!r}")
    cat = C.cat
    members = C.indices
    result = []
    for j, X in enumerate(cat.indecs):
        blocks = [_pair_blocks(cat, i, j, side) for i in members]
        full = True
        for v, d in enumerate(X.dims):
            if d == 0:
                continue
            pieces = [b[v] for b in blocks if b[v].shape[0]]
            if not pieces or rank(np.vstack(pieces), X.p) != d:
                full = False
                break
        if full:
            result.append(j)
    return Subcat.from_indices(cat, result)


def _pair_blocks(cat, i, j, side):
    """
    Per vertex of ``X_j``, rows spanning the images of all maps ``X_i -> X_j`` (fac) or the rows of all maps
    ``X_j -> X_i`` (sub); both have full rank at every vertex exactly when the trace is everything (fac) or the
    reject is zero (sub).
    """

    def build():
        X = cat.indecs[j]
        if side == "fac":
            maps = hom_basis(cat.indecs[i], X).basis
            return [np.vstack([f.mats[v].T for f in maps]) if maps else np.zeros((0, d), dtype=np.int64)
                    for v, d in enumerate(X.dims)]
        maps = hom_basis(X, cat.indecs[i]).basis
        return [np.vstack([f.mats[v] for f in maps]) if maps else np.zeros((0, d), dtype=np.int64)
                for v, d in enumerate(X.dims)]

    return cat.memo(("closure_blocks", side, i, j), build)
