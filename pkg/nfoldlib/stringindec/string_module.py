import numpy as np

from nfoldlib.repcore import Representation


def string_module(A, w):
    """
    The string module of a word: one basis vector per position, arrows acting as 0/1 shifts along the word.

    Parameters
    ----------
    A : BoundQuiverAlgebra
        The algebra.
    w : StringWord
        A string of `A`.

    Returns
    -------
    Representation
        At each vertex the basis vectors are ordered by position in the word.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the word ``b`` gives the projective at 2 and
    the trivial word at 3 the simple at 3.
    """
    visited = w.positions(A)
    counts = {v: 0 for v in A.vertices}
    slot = []
    for v in visited:
        slot.append(counts[v])
        counts[v] += 1
    dims = [counts[v] for v in A.vertices]
    maps = {a.name: np.zeros((counts[a.target], counts[a.source]), dtype=np.int64) for a in A.arrows}
    for i, (name, sign) in enumerate(w.letters):
        if sign > 0:
            maps[name][slot[i + 1], slot[i]] = 1
        else:
            maps[name][slot[i], slot[i + 1]] = 1
    return Representation(A, dims, maps)
