import itertools
import logging

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError
from nfoldlib.exactmat import rank
from nfoldlib.repcore import direct_sum
from .hom_basis import hom_basis
from .min_proj_presentation import min_proj_presentation, syzygy_module, top_generators
from .module_map import ModuleMap, cokernel_of

logger = logging.getLogger(__name__)


def ext_dim(M, N, j=1):
    r"""
    Dimension of :math:`\mathrm{Ext}^j(M, N)` for :math:`j \geq 1`.

    With :math:`X = \Omega^{j-1} M` and its projective cover :math:`P_0 \to X`, the restriction
    :math:`\mathrm{Hom}(P_0, N) \to \mathrm{Hom}(\Omega X, N)` has kernel :math:`\mathrm{Hom}(X, N)`, so

    .. math:: \dim\mathrm{Ext}^j(M, N) = \dim\mathrm{Hom}(\Omega X, N) - \dim\mathrm{Hom}(P_0, N) + \dim\mathrm{Hom}(X, N).

    Parameters
    ----------
    M, N : Representation
        Modules over the same algebra.
    j : int, optional
        Degree, at least 1.

    Returns
    -------
    int

    Raises
    ------
    ValueError
        If `j` is below 1.
    """
    if j < 1:
        raise ValueError(f"Ext degree must be at least 1, got {j}")
    X = syzygy_module(M, j - 1)
    if X.total_dim == 0 or N.total_dim == 0:
        return 0
    tops = top_generators(X)
    omega = syzygy_module(X, 1)
    hom_p0 = sum(N.dim_at(v) for v, _ in tops)
    return omega.hom_dim(N) - hom_p0 + X.hom_dim(N)


def ext_classes(C, A, guard=constants.EXT_DIM_GUARD):
    r"""
    Representatives of a basis of :math:`\mathrm{Ext}^1(C, A)` as maps :math:`\Omega C \to A`.

    Returns
    -------
    presentation : Presentation
        The minimal presentation of `C` whose syzygy is used.
    representatives : list of ModuleMap
        Maps ``Omega C -> A`` whose classes modulo restrictions of ``Hom(P0, A)`` form a basis.

    Raises
    ------
    GuardExceededError
        If the dimension exceeds `guard`.
    """
    pres = min_proj_presentation(C)
    omega = pres.syzygy.source
    p = C.p
    target_space = hom_basis(omega, A)
    restricted = [(f @ pres.syzygy).flat() for f in hom_basis(pres.P0, A).basis]
    span = np.vstack(restricted) if restricted else np.zeros((0, target_space.vectors.shape[1]), dtype=np.int64)
    current = rank(span, p)
    chosen = []
    for vec in target_space.vectors:
        trial = np.vstack([span, vec])
        r = rank(trial, p)
        if r > current:
            span, current = trial, r
            chosen.append(ModuleMap.from_vector(omega, A, vec, target_space.offsets))
    if len(chosen) > guard:
        raise GuardExceededError(f"Ext dimension {len(chosen)} exceeds the guard {guard}")
    return pres, chosen


def extension_middle_terms(C, A, guard=constants.EXT_DIM_GUARD):
    r"""
    Middle terms of all extensions :math:`0 \to A \to E \to C \to 0`, one per class of
    :math:`\mathrm{Ext}^1(C, A)`.

    A class represented by :math:`\varphi: \Omega C \to A` has middle term the pushout, the cokernel of
    :math:`(\varphi, -\iota): \Omega C \to A \oplus P_0`.

    Parameters
    ----------
    C, A : Representation
        End and start terms.
    guard : int, optional
        Largest Ext dimension whose classes are enumerated, by default ``constants.EXT_DIM_GUARD``.

    Returns
    -------
    list of (tuple, Representation)
        Coefficient vector of the class in the chosen basis and the middle term; the zero class (the split
        extension) comes first.

    Raises
    ------
    GuardExceededError
        If ``dim Ext^1(C, A)`` exceeds `guard`.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, ``extension_middle_terms(S2, P1)`` yields
    ``P1 + S2`` for the zero class and ``P2`` for the nonzero class.
    """
    pres, reps = ext_classes(C, A, guard)
    p = C.p
    iota = pres.syzygy
    middle = direct_sum(A, pres.P0)
    results = []
    for coeffs in itertools.product(range(p), repeat=len(reps)):
        if any(coeffs):
            phi = reps[0].scale(0)
            for c, f in zip(coeffs, reps):
                phi = phi + f.scale(c)
            mats = [np.vstack([phi.mats[i], (-iota.mats[i]) % p]) for i in range(len(A.dims))]
            E = cokernel_of(ModuleMap(iota.source, middle, mats, check=False)).target
        else:
            E = direct_sum(A, C)
        results.append((tuple(coeffs), E))
    logger.debug("Ext^1(%s, %s) has %d classes", C.dims, A.dims, len(results))
    return results
