import numpy as np

from .rref import rref


def kernel_basis(m, p):
    r"""
    Canonical basis of the right null space of `m` over :math:`\mathbb{F}_p`.

    Parameters
    ----------
    m : array_like
        A 2-D integer matrix with `cols` columns.
    p : int
        Prime modulus.

    Returns
    -------
    basis : ndarray
        Array of shape ``(cols - rank, cols)``; row `k` is the solution with the `k`-th free variable
        equal to one and the other free variables zero.

    Examples
    --------
    >>> kernel_basis([[1, 1, 0], [0, 1, 1]], 2)
    array([[1, 1, 1]])
    """
    r, k, pivots = rref(m, p)
    cols = r.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(pivots):
            basis[row, c] = (-r[i, f]) % p
    return basis
