import numpy as np

from nfoldlib.exactmat import kernel_basis
from nfoldlib.repcore import Submodule
from .hom_basis import hom_basis


def trace(U, M):
    """
    Trace of a family of modules in `M`: the sum of the images of all homomorphisms ``U_i -> M``.

    `M` lies in Fac of the direct sum of `U` exactly when the trace is all of `M`.

    Parameters
    ----------
    U : sequence of Representation
        The family; may be empty.
    M : Representation

    Returns
    -------
    Submodule
    """
    columns = [[] for _ in M.dims]
    for X in U:
        for f in hom_basis(X, M).basis:
            for i, m in enumerate(f.mats):
                if m.size:
                    columns[i].append(m.T)
    bases = [np.vstack(c) if c else np.zeros((0, d), dtype=np.int64) for c, d in zip(columns, M.dims)]
    return Submodule(M, bases, check=False)


def reject(U, M):
    """
    Reject of a family in `M`: the intersection of the kernels of all homomorphisms ``M -> U_i``.

    `M` lies in Sub of the direct sum of `U` exactly when the reject is zero; for an empty family the reject
    is all of `M`.
    """
    rows = [[] for _ in M.dims]
    for X in U:
        for f in hom_basis(M, X).basis:
            for i, m in enumerate(f.mats):
                if m.size:
                    rows[i].append(m)
    bases = [kernel_basis(np.vstack(r) if r else np.zeros((0, d), dtype=np.int64), M.p)
             for r, d in zip(rows, M.dims)]
    return Submodule(M, bases, check=False)
