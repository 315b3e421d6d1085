import logging
from dataclasses import dataclass

import numpy as np

from nfoldlib.exactmat import rref
from nfoldlib.repcore import direct_sum, structural_module
from .module_map import ModuleMap, kernel_of

logger = logging.getLogger(__name__)


@dataclass
class Presentation:
    """
    Minimal projective presentation ``P1 --d--> P0 --augmentation--> M -> 0``.

    `tops0` and `tops1` list the generators as ``(vertex, vector)`` pairs: those of `M` (vectors in the spaces of
    `M`) and those of the syzygy (vectors in the spaces of ``syzygy.source``). ``P0`` and ``P1`` are the direct
    sums of the projectives at the generator vertices, in that order.
    """
    module: object
    tops0: list
    tops1: list
    P0: object
    P1: object
    augmentation: ModuleMap
    syzygy: ModuleMap
    d: ModuleMap

    @property
    def vertices0(self):
        return [v for v, _ in self.tops0]

    @property
    def vertices1(self):
        return [v for v, _ in self.tops1]

    def component(self, l, k):
        """
        The summand ``P1_k -> P0_l`` of `d` as coefficients on the basis paths from ``vertices0[l]`` to
        ``vertices1[k]``; returns ``(paths, coefficients)``.
        """
        A = self.module.algebra
        v, w = self.vertices0[l], self.vertices1[k]
        wi = A.vertex_index(w)
        col = _block_start(A, self.vertices1, k, wi)
        row = _block_start(A, self.vertices0, l, wi)
        paths = A.paths_from(v, target=w)
        coeffs = self.d.mats[wi][row:row + len(paths), col]
        return paths, coeffs


def _block_start(A, vertices, k, wi):
    w = A.vertices[wi]
    return sum(len(A.paths_from(v, target=w)) for v in vertices[:k])


def top_generators(M):
    """
    Elements of `M` whose classes form a basis of its top ``M / rad M``, as ``(vertex, vector)`` pairs.

    At each vertex the radical is the span of the images of the incoming arrows; the generators are the unit
    vectors at the non-pivot coordinates of its echelon basis.
    """
    A = M.algebra
    generators = []
    for i, v in enumerate(A.vertices):
        d = M.dims[i]
        if d == 0:
            continue
        images = [M.maps[a.name].T for a in A.quiver.in_arrows(v)]
        stacked = np.vstack(images) if images else np.zeros((0, d), dtype=np.int64)
        _, _, pivots = rref(stacked, M.p)
        pivot_set = set(pivots)
        for c in range(d):
            if c not in pivot_set:
                e = np.zeros(d, dtype=np.int64)
                e[c] = 1
                generators.append((v, e))
    return generators


def projective_map(generators, M):
    """
    The map ``P_{v_1} + ... + P_{v_k} -> M`` sending the trivial path of the `i`-th summand to the `i`-th
    generator ``(v_i, x_i)``; a basis path ``q`` of that summand goes to ``M_q(x_i)``.
    """
    A = M.algebra
    summands = [structural_module(A, "projective", v) for v, _ in generators]
    P = direct_sum(*summands, algebra=A)
    mats = [np.zeros((M.dims[i], P.dims[i]), dtype=np.int64) for i in range(len(A.vertices))]
    offsets = [0] * len(A.vertices)
    for v, x in generators:
        for w in A.vertices:
            wi = A.vertex_index(w)
            for q in A.paths_from(v, target=w):
                mats[wi][:, offsets[wi]] = M.path_action(q.arrows, source=v) @ x % M.p
                offsets[wi] += 1
    return ModuleMap(P, M, mats, check=False, summand_modules=summands)


def min_proj_presentation(M):
    """
    Minimal projective presentation of a module.

    Parameters
    ----------
    M : Representation
        The module; the zero module gives the empty presentation.

    Returns
    -------
    Presentation
        ``P0`` is the projective cover of `M`, ``P1`` the projective cover of the syzygy.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b`` the simple at 2 has ``P0 = P2`` and ``P1 = P1``.
    """
    tops0 = top_generators(M)
    cover = projective_map(tops0, M)
    syzygy = kernel_of(cover)
    tops1 = top_generators(syzygy.source)
    cover1 = projective_map(tops1, syzygy.source)
    d = syzygy @ cover1
    logger.debug("presentation of %s: P0 at %s, P1 at %s", M.dims, [v for v, _ in tops0], [v for v, _ in tops1])
    return Presentation(M, tops0, tops1, cover.source, cover1.source, cover, syzygy, d)


def syzygy_module(M, j=1):
    """The `j`-th syzygy of `M` as a representation (``j = 0`` gives `M`)."""
    for _ in range(j):
        if M.total_dim == 0:
            break
        M = kernel_of(projective_map(top_generators(M), M)).source
    return M
