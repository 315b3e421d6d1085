import logging

import numpy as np

from nfoldlib.quiverlang import opposite
from nfoldlib.repcore import direct_sum, structural_module
from .min_proj_presentation import min_proj_presentation
from .module_map import ModuleMap, kernel_of

logger = logging.getLogger(__name__)


def tau(M):
    r"""
    Auslander-Reiten translate of a module.

    With the minimal presentation :math:`P_1 \xrightarrow{d} P_0 \to M \to 0`, the Nakayama functor turns
    each summand :math:`P_w \to P_v` of `d`, an element :math:`\sum_r c_r r` of :math:`e_v \Lambda e_w`,
    into :math:`I_w \to I_v` sending the dual of a path :math:`q = \lambda r` to :math:`\sum c_r \lambda^*`;
    then :math:`\tau M = \mathrm{Ker}(\nu d)`.

    Parameters
    ----------
    M : Representation
        The module.

    Returns
    -------
    Representation
        Zero for projective `M`.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``: ``tau(S2)`` is ``P1`` and ``tau(S3)`` is ``S2``.
    """
    return nakayama_map(min_proj_presentation(M)).source if M.total_dim else M


def nakayama_map(pres):
    """The inclusion ``tau M -> nu P1`` obtained as the kernel of ``nu d``."""
    M = pres.module
    A = M.algebra
    p = M.p
    inj0 = [structural_module(A, "injective", v) for v in pres.vertices0]
    inj1 = [structural_module(A, "injective", w) for w in pres.vertices1]
    I0 = direct_sum(*inj0, algebra=A)
    I1 = direct_sum(*inj1, algebra=A)
    coords = {v: _dual_paths(A, v) for v in set(pres.vertices0) | set(pres.vertices1)}
    mats = []
    for xi, x in enumerate(A.vertices):
        m = np.zeros((I0.dims[xi], I1.dims[xi]), dtype=np.int64)
        col = 0
        for k, w in enumerate(pres.vertices1):
            sources = coords[w][x]
            row = 0
            for l, v in enumerate(pres.vertices0):
                targets = coords[v][x]
                position = {lam: i for i, lam in enumerate(targets)}
                paths, coeffs = pres.component(l, k)
                for qi, q in enumerate(sources):
                    for r, c in zip(paths, coeffs):
                        if c and len(r.arrows) <= len(q) and q[len(q) - len(r.arrows):] == r.arrows:
                            lam = q[:len(q) - len(r.arrows)]
                            m[row + position[lam], col + qi] += c
                row += len(targets)
            col += len(sources)
        mats.append(m % p)
    nu_d = ModuleMap(I1, I0, mats, check=False)
    tau_inclusion = kernel_of(nu_d)
    logger.debug("tau of %s has dims %s", M.dims, tau_inclusion.source.dims)
    return tau_inclusion


def _dual_paths(A, v):
    """
    Per vertex ``x``, the paths ``x -> v`` of `A` (as arrow tuples) indexing the basis of the injective at `v`,
    in the order used by ``structural_module(A, 'injective', v)``.
    """
    op_paths = opposite(A).paths_from(v)
    return {x: [tuple(reversed(q.arrows)) for q in op_paths if q.target == x] for x in A.vertices}
