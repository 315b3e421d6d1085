import numpy as np
from scipy.linalg import block_diag

from .representation import Representation


def direct_sum(*modules, algebra=None):
    """
    Direct sum of representations with block-diagonal arrow matrices.

    Parameters
    ----------
    *modules : Representation
        Summands, all over the same algebra. The coordinates at each vertex are the concatenation of the
        summands' coordinates in argument order.
    algebra : BoundQuiverAlgebra, optional
        Needed only when no summand is given; the result is then the zero module.

    Returns
    -------
    Representation

    Raises
    ------
    ValueError
        If the summands live over different algebras or nothing determines the algebra.

    Examples
    --------
    ``direct_sum(S2, S2)`` over a three-vertex algebra has dimension vector ``(0, 2, 0)``.
    """
    if not modules:
        if algebra is None:
            raise ValueError("direct_sum of no modules needs the algebra")
        return zero_module(algebra)
    A = modules[0].algebra if algebra is None else algebra
    for M in modules:
        if M.algebra != A:
            raise ValueError("direct_sum of modules over different algebras")
    if len(modules) == 1:
        return modules[0]
    dims = np.sum([M.dims for M in modules], axis=0)
    maps = {a.name: block_diag(*[M.maps[a.name] for M in modules]).astype(np.int64) for a in A.arrows}
    return Representation(A, dims, maps, check=False)


def zero_module(A):
    return Representation(A, [0] * len(A.vertices), check=False)


def summand_offsets(modules):
    """Per vertex, the start of each summand's block inside the direct sum (one extra entry for the end)."""
    table = np.zeros((len(modules) + 1, len(modules[0].dims) if modules else 0), dtype=int)
    for k, M in enumerate(modules):
        table[k + 1] = table[k] + np.asarray(M.dims)
    return table
