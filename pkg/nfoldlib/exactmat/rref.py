import numpy as np


def rref(m, p):
    r"""
    Reduced row echelon form over :math:`\mathbb{F}_p`.

    Parameters
    ----------
    m : array_like
        A 2-D integer matrix.
    p : int
        Prime modulus.

    Returns
    -------
    r : ndarray
        The unique reduced row echelon form of `m` (same shape, int64, entries in ``[0, p)``).
    rank : int
        Number of pivots.
    pivots : list of int
        Pivot columns in increasing order.

    Notes
    -----
    Elimination clears a whole pivot column with one outer product, so the cost per pivot is one
    vectorized update of the matrix.

    Examples
    --------
    >>> rref([[1, 1], [1, 1]], 2)[1]
    1
    """
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def as_matrix(m, p):
    """Coerce to a reduced 2-D int64 array; an empty 1-D input becomes a 0x0 matrix."""
    a = np.asarray(m, dtype=np.int64)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(0, 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return np.mod(a, p)


def rank(m, p):
    """Rank of `m` over F_p."""
    return rref(m, p)[1]


def row_space(m, p):
    """Canonical basis (nonzero RREF rows) of the row space of `m`."""
    r, k, _ = rref(m, p)
    return r[:k]
