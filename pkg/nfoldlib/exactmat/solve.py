import numpy as np

from .rref import rref, as_matrix


def solve(m, rhs, p):
    r"""
    Solve :math:`m x = rhs` over :math:`\mathbb{F}_p`.

    Parameters
    ----------
    m : array_like
        Coefficient matrix of shape ``(rows, cols)``.
    rhs : array_like
        Right-hand side of length `rows`.
    p : int
        Prime modulus.

    Returns
    -------
    x : ndarray or None
        The particular solution with every free variable set to zero, or ``None`` when `rhs` is not in
        the column space of `m`.

    Raises
    ------
    ValueError
        If the length of `rhs` differs from the number of rows of `m`.
    """
    a = as_matrix(m, p)
    b = np.mod(np.asarray(rhs, dtype=np.int64).reshape(-1), p)
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ValueError(f"right-hand side has length {b.shape[0]}, matrix has {rows} rows")
    r, k, pivots = rref(np.hstack([a, b.reshape(rows, 1)]), p)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, cols]
    return x
