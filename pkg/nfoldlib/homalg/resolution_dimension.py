import logging

from nfoldlib.repcore import structural_module
from .minimal_approximation import minimal_approximation
from .module_map import kernel_of

logger = logging.getLogger(__name__)


def resolution_dimension(M, resolving, limit=None):
    """
    Length of the minimal resolution of `M` by add(`resolving`).

    Kernels of right minimal approximations are taken until the approximated module lies in add(`resolving`),
    i.e. until the approximation is an isomorphism.

    Parameters
    ----------
    M : Representation
        The module.
    resolving : sequence of Representation
        Pairwise non-isomorphic indecomposables including every indecomposable projective.
    limit : int, optional
        Largest depth tried; defaults to ``dim(algebra) * sum(M.dims)``.

    Returns
    -------
    int or None
        None when the depth exceeds `limit` (the resolution is not finite).
    """
    if limit is None:
        limit = M.algebra.dim * max(1, M.total_dim)
    current = M
    for depth in range(limit + 1):
        if current.total_dim == 0:
            return depth
        f = minimal_approximation("right", current, resolving)
        if f.is_iso():
            return depth
        if not f.is_epi():
            raise ValueError("resolving family does not contain the projectives")
        current = kernel_of(f).source
    logger.info("resolution of %s exceeds depth %d", M.dims, limit)
    return None


def global_dim(A):
    """
    Global dimension: the largest projective dimension of a simple module, or None if one diverges.

    Examples
    --------
    The radical-square-zero quotient of linear A_m has global dimension ``m - 1``.
    """
    projectives = [structural_module(A, "projective", v) for v in A.vertices]
    result = 0
    for v in A.vertices:
        d = resolution_dimension(structural_module(A, "simple", v), projectives)
        if d is None:
            return None
        result = max(result, d)
    return result
