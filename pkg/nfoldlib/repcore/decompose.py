import collections
import logging

import numpy as np
import sympy

from nfoldlib.errors import DecompositionError
from .direct_sum import direct_sum
from .is_isomorphic import is_isomorphic

logger = logging.getLogger(__name__)


def decompose(M, cat, verify=True):
    r"""
    Multiplicities of the catalog indecomposables in a module.

    The multiplicity vector :math:`m` solves :math:`\dim\mathrm{Hom}(M, X_i) = \sum_j m_j
    \dim\mathrm{Hom}(X_j, X_i)` for every catalog index :math:`i`; the Hom-count matrix is inverted exactly.

    Parameters
    ----------
    M : Representation
        The module.
    cat : IndecCatalog
        Complete catalog of indecomposables of the algebra of `M`.
    verify : bool, optional
        Rebuild the direct sum and check it is isomorphic to `M`, by default True. Without it the solution is
        still checked to be a nonnegative integer vector matching the dimension vector.

    Returns
    -------
    collections.Counter
        Catalog index to multiplicity (indices with multiplicity zero are absent).

    Raises
    ------
    DecompositionError
        If the Hom-count matrix is singular, the solution is not a nonnegative integer vector, or the rebuild
        check fails. Any of these means the catalog is incomplete.
    """
    if M.algebra != cat.algebra:
        raise ValueError("module and catalog over different algebras")
    if M.total_dim == 0:
        return collections.Counter()
    inverse = cat.memo(("hom_count_inverse",), lambda: _hom_count_inverse(cat))
    h = sympy.Matrix(1, len(cat), [M.hom_dim(X) for X in cat.indecs])
    m = h * inverse
    result = collections.Counter()
    for j, value in enumerate(m):
        if not value.is_integer or value < 0:
            raise DecompositionError(f"decomposition failed: multiplicity {value} of {cat.labels[j]} for {M.dims}")
        if value:
            result[j] = int(value)
    dims = np.zeros(len(M.dims), dtype=int)
    for j, k in result.items():
        dims += k * np.asarray(cat.indecs[j].dims)
    if tuple(dims) != M.dims:
        raise DecompositionError(f"decomposition failed: summands give {tuple(dims)}, module has {M.dims}")
    if verify:
        rebuilt = direct_sum(*[cat.indecs[j] for j in sorted(result) for _ in range(result[j])])
        if not is_isomorphic(M, rebuilt):
            raise DecompositionError(f"decomposition failed: rebuild of {M.dims} is not isomorphic")
    return result


def _hom_count_inverse(cat):
    H = sympy.Matrix(np.asarray(cat.hom_dims, dtype=int).reshape(len(cat), len(cat)).tolist())
    if H.shape[0] and H.det() == 0:
        raise DecompositionError("decomposition failed: singular Hom-count matrix")
    logger.debug("inverted Hom-count matrix of size %d", H.shape[0])
    return H.inv() if H.shape[0] else H
