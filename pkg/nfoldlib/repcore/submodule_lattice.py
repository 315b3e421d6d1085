import itertools
import logging

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError
from nfoldlib.exactmat import rank
from .representation import Submodule

logger = logging.getLogger(__name__)


def submodule_lattice(M, dim_bound=constants.SUBMODULE_DIM_BOUND, subspace_guard=constants.SUBSPACE_GUARD):
    """
    Every submodule of a representation, each exactly once.

    Subspaces are enumerated vertex by vertex in reduced row echelon form and a partial choice is dropped
    as soon as an arrow between two chosen vertices fails to preserve it.

    Parameters
    ----------
    M : Representation
        The module.
    dim_bound : int, optional
        Largest total dimension accepted, by default ``constants.SUBMODULE_DIM_BOUND``.
    subspace_guard : int, optional
        Largest number of subspaces enumerated at one vertex, by default ``constants.SUBSPACE_GUARD``.

    Returns
    -------
    list of Submodule
        Sorted by total dimension, then dimension vector, then the echelon bases.

    Raises
    ------
    GuardExceededError
        If a bound is exceeded.
    """
    if M.total_dim > dim_bound:
        raise GuardExceededError(f"dimension bound exceeded: total dimension {M.total_dim} > {dim_bound}")
    p = M.p
    A = M.algebra
    n = len(A.vertices)
    choices = []
    for d in M.dims:
        count = _subspace_count(d, p)
        if count > subspace_guard:
            raise GuardExceededError(f"dimension bound exceeded: {count} subspaces of F_{p}^{d} > {subspace_guard}")
        choices.append(list(subspaces(d, p)))
    arrows_by_end = [[] for _ in range(n)]
    for a in A.arrows:
        s, t = A.vertex_index(a.source), A.vertex_index(a.target)
        arrows_by_end[max(s, t)].append((a.name, s, t))

    found = []
    chosen = [None] * n

    def stable(i):
        for name, s, t in arrows_by_end[i]:
            if chosen[s].shape[0] == 0:
                continue
            image = (chosen[s] @ M.maps[name].T) % p
            if rank(np.vstack([chosen[t], image]), p) != chosen[t].shape[0]:
                return False
        return True

    def descend(i):
        if i == n:
            found.append(Submodule(M, [c.copy() for c in chosen], check=False))
            return
        for basis in choices[i]:
            chosen[i] = basis
            if stable(i):
                descend(i + 1)

    descend(0)
    found.sort(key=lambda S: (S.total_dim, S.dims, b"".join(b.tobytes() for b in S.bases)))
    logger.debug("module %s has %d submodules", M.dims, len(found))
    return found


def subspaces(d, p):
    """All subspaces of F_p^d as reduced row echelon bases, by increasing dimension."""
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                basis = np.zeros((k, d), dtype=np.int64)
                for r, pc in enumerate(pivots):
                    basis[r, pc] = 1
                for (r, c), x in zip(free, values):
                    basis[r, c] = x
                yield basis


def _subspace_count(d, p):
    total = 0
    for k in range(d + 1):
        num, den = 1, 1
        for i in range(k):
            num *= p ** (d - i) - 1
            den *= p ** (k - i) - 1
        total += num // den
    return total
