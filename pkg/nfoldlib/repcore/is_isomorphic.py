import itertools
import logging

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError
from nfoldlib.exactmat import rank

logger = logging.getLogger(__name__)


def is_isomorphic(M, N, seed=constants.SEED, sample_budget=constants.ISO_SAMPLE_BUDGET,
                  enum_guard=constants.ISO_ENUM_GUARD):
    """
    Decide whether two representations are isomorphic.

    Equal dimension vectors and ``dim Hom(M, N) == dim End(M)`` are necessary. An invertible element of
    Hom(M, N) is then searched by seeded random sampling, followed by exhaustive enumeration when the Hom
    space has at most `enum_guard` elements.

    Parameters
    ----------
    M, N : Representation
        Modules over the same algebra.
    seed : int, optional
        Seed of the sampler.
    sample_budget : int, optional
        Number of random Hom elements tried.
    enum_guard : int, optional
        Largest Hom space enumerated exhaustively.

    Returns
    -------
    bool

    Raises
    ------
    GuardExceededError
        "iso test inconclusive" when sampling failed and the Hom space is too large to enumerate.
    """
    if M.algebra != N.algebra:
        raise ValueError("modules over different algebras")
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    if M == N:
        return True
    basis, offsets = M.hom_vectors(N)
    h = basis.shape[0]
    if h != M.hom_dim(M) or h != N.hom_dim(M):
        return False
    p = M.p
    rng = np.random.default_rng(seed)
    for _ in range(sample_budget):
        coeffs = rng.integers(0, p, size=h)
        if _invertible(M, (coeffs @ basis) % p, offsets):
            return True
    if p ** h > enum_guard:
        raise GuardExceededError(f"iso test inconclusive: Hom space of dimension {h} over F_{p} "
                                 f"exceeds {enum_guard} elements after {sample_budget} samples")
    logger.debug("exhaustive isomorphism search over %d elements", p ** h)
    for coeffs in itertools.product(range(p), repeat=h):
        if _invertible(M, (np.asarray(coeffs, dtype=np.int64) @ basis) % p, offsets):
            return True
    return False


def _invertible(M, vector, offsets):
    for i, d in enumerate(M.dims):
        if d and rank(vector[offsets[i]:offsets[i + 1]].reshape(d, d), M.p) != d:
            return False
    return True
