import functools
import logging

import numpy as np

from nfoldlib.errors import UnsupportedAlgebraError
from nfoldlib.exactmat import rank, row_space
from .ext_dim import ext_dim
from .hom_basis import hom_basis
from .module_map import ModuleMap, codiagonal, kernel_of, restrict_to_summands, stack_maps

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=4096)
def radical_basis(X, Y, same):
    r"""
    Basis of the radical maps ``X -> Y`` between indecomposables, as a list of ModuleMap.

    For non-isomorphic `X` and `Y` (``same=False``) every map is radical. For ``same=True`` (``X is Y``) the
    radical consists of the nilpotent endomorphisms; each basis endomorphism :math:`b` is shifted by the
    unique scalar :math:`c` making :math:`b - c\,\mathrm{id}` nilpotent.

    Raises
    ------
    UnsupportedAlgebraError
        If some endomorphism has no such scalar, i.e. the endomorphism ring of `X` is not split local over
        the prime field.
    """
    space = hom_basis(X, Y)
    if not same:
        return space.basis
    p = X.p
    identity = ModuleMap.identity(X)
    shifted = []
    for b in space.basis:
        for c in range(p):
            candidate = b + identity.scale(-c)
            if _nilpotent(candidate):
                shifted.append(candidate.flat())
                break
        else:
            raise UnsupportedAlgebraError(
                f"endomorphism ring of the module with dims {X.dims} is not split local over F_{p}")
    if not shifted:
        return []
    return [ModuleMap.from_vector(X, Y, v, space.offsets) for v in row_space(np.vstack(shifted), p)]


def _nilpotent(f):
    p = f.p
    for m in f.mats:
        d = m.shape[0]
        power = m
        for _ in range(d):
            if not power.any():
                break
            power = (power @ m) % p
        if power.any():
            return False
    return True


def minimal_approximation(side, M, addset):
    """
    Minimal left or right add(`addset`)-approximation of a module.

    The right approximation has ``X_i`` with multiplicity the dimension of Hom(X_i, M) modulo the maps that
    factor through a radical map ``X_i -> X_j``; lifts of a basis of that quotient are glued into one map
    ``+ X_i^(k_i) -> M``. The left approximation is dual.

    Parameters
    ----------
    side : {'left', 'right'}
        ``'right'``: a map into `M`; ``'left'``: a map out of `M`.
    M : Representation
        The module to approximate.
    addset : sequence of Representation
        Pairwise non-isomorphic indecomposables.

    Returns
    -------
    ModuleMap
        With ``summands`` the addset indices of the summands of the source (right) or target (left), in
        block order, and ``summand_modules`` the summands.

    Raises
    ------
    ValueError
        On an unknown side.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the right minimal approximation of ``S3`` by
    ``[P2, S2, P3]`` is the epimorphism ``P3 -> S3``.
    """
    if side not in ("left", "right"):
        raise ValueError(f"unknown approximation side {side!r}")
    p = M.p
    right = side == "right"
    homs = [hom_basis(X, M) if right else hom_basis(M, X) for X in addset]
    chosen = []
    summands = []
    for i, X in enumerate(addset):
        space = homs[i]
        if space.dim == 0:
            continue
        factored = []
        for j, Y in enumerate(addset):
            if homs[j].dim == 0:
                continue
            source, target = (X, Y) if right else (Y, X)
            for r in radical_basis(source, target, i == j):
                for h in homs[j].basis:
                    factored.append((h @ r).flat() if right else (r @ h).flat())
        span = np.vstack(factored) if factored else np.zeros((0, space.vectors.shape[1]), dtype=np.int64)
        current = rank(span, p)
        for vec in space.vectors:
            trial = np.vstack([span, vec])
            r = rank(trial, p)
            if r > current:
                span, current = trial, r
                chosen.append(ModuleMap.from_vector(space.source, space.target, vec, space.offsets))
                summands.append(i)
    modules = [addset[i] for i in summands]
    glued = codiagonal(chosen, M) if right else stack_maps(chosen, M)
    f = ModuleMap(glued.source, glued.target, glued.mats, check=False, summands=summands,
                  summand_modules=modules)
    logger.debug("%s minimal approximation of %s uses summands %s", side, M.dims, summands)
    return f


def is_approximation(f, addset, side):
    """True if every map between `addset` and the approximated module factors through `f`."""
    p = f.p
    for X in addset:
        if side == "right":
            need = hom_basis(X, f.target).dim
            images = [(f @ g).flat() for g in hom_basis(X, f.source).basis]
        else:
            need = hom_basis(f.source, X).dim
            images = [(g @ f).flat() for g in hom_basis(f.target, X).basis]
        if need and (not images or rank(np.vstack(images), p) < need):
            return False
    return True


def strip_summands(f, addset, side):
    """
    Remove summands of an approximation while it stays an approximation, to a fixpoint.

    A minimal approximation is returned unchanged.
    """
    changed = True
    while changed:
        changed = False
        for k in range(len(f.summands)):
            g = restrict_to_summands(f, [i for i in range(len(f.summands)) if i != k], side)
            if is_approximation(g, addset, side):
                f = g
                changed = True
                break
    return f


def wakamatsu_check(M, addset):
    r"""
    True if :math:`\mathrm{Ext}^1(X, \mathrm{Ker}\,\varphi) = 0` for every `X` in `addset`, where
    :math:`\varphi` is the right minimal add(`addset`)-approximation of `M`.
    """
    K = kernel_of(minimal_approximation("right", M, addset)).source
    return all(ext_dim(X, K) == 0 for X in addset)
