import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError, VerificationError
from .census import ses_census
from .is_cne_closed import is_cne_closed
from .subcat import Subcat, check_catalog_size

logger = logging.getLogger(__name__)

_CHUNK = 4096


def enumerate_nfold(cat, n, side="tors", mu=constants.MU, guard=constants.SUBSET_GUARD, workers=1):
    """
    All n-fold torsion (``side='tors'``) or torsion-free (``side='torf'``) classes.

    The one-fold classes come from the torsion lattice. A k-fold class is a torsion (torsion-free) class of a
    ``(k - 1)``-fold class ``E``: closed under conflations in ``E`` and admissible quotients (subobjects) in
    ``E``. Both are tested on every subset of every ``E`` against the exact-sequence census.

    Parameters
    ----------
    cat : IndecCatalog
    n : int
        Fold, at least 1.
    side : {'tors', 'torf'}
    mu : int, optional
        Multiplicity bound of the census.
    guard : int, optional
        Largest number of subsets tested per level.
    workers : int, optional
        Threads testing the subsets of different classes.

    Returns
    -------
    list of Subcat
        Deduplicated, ordered by size then members.

    Raises
    ------
    GuardExceededError
        If a level needs more than `guard` subset tests.
    VerificationError
        If an n-fold class for ``n >= 2`` is not closed under extensions and ``(n - 1)``-cokernels
        (``(n - 1)``-kernels for ``torf``).

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b`` there are 12 torsion classes and 17 two-fold
    torsion classes.
    """
    if n < 1:
        raise ValueError(f"fold must be at least 1, got {n}")
    if side not in ("tors", "torf"):
        raise ValueError(f"unknown side {side!r}")
    check_catalog_size(cat)

    def build():
        if n == 1:
            from nfoldlib.taufold.torsion_lattice import torsion_lattice
            lattice = torsion_lattice(cat)
            return list(lattice.classes if side == "tors" else lattice.torf_classes)
        previous = enumerate_nfold(cat, n - 1, side, mu, guard, workers)
        tests = sum(1 << len(E) for E in previous)
        if tests > guard:
            raise GuardExceededError(f"subset search of {tests} candidates exceeds the guard {guard}")
        census = ses_census(cat, mu, workers=workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = set()
            for masks in pool.map(lambda E: _relative_classes(E, census, side), previous):
                found.update(masks)
        classes = sorted((Subcat(cat, m) for m in found), key=Subcat.sort_key)
        end = "cok" if side == "tors" else "ker"
        for C in classes:
            verdict = is_cne_closed(C, n - 1, end, mu)
            if not verdict:
                raise VerificationError(f"{n}-fold {side} class {C.label()} is not {end}-closed: {verdict.witness}")
        logger.info("%d-fold %s classes: %d (from %d subset tests)", n, side, len(classes), tests)
        return classes

    return cat.memo(("nfold", n, side, mu), build)


def _relative_classes(E, census, side):
    """Masks of the subsets of `E` that are torsion (torsion-free) classes of the exact category `E`."""
    rows = census.inside(E.mask)
    a, b, c = census.a[rows], census.b[rows], census.c[rows]
    bits = np.array([1 << i for i in E.indices], dtype=np.uint64)
    found = []
    total = 1 << len(bits)
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        chosen = ((codes[:, None] >> np.arange(len(bits), dtype=np.uint64)) & np.uint64(1)).astype(bool)
        subs = np.bitwise_or.reduce(np.where(chosen, bits, np.uint64(0)), axis=1)
        outside = ~subs[:, None]
        has_a = (a[None, :] & outside) == 0
        has_b = (b[None, :] & outside) == 0
        has_c = (c[None, :] & outside) == 0
        has_end = has_c if side == "tors" else has_a
        broken = (has_a & has_c & ~has_b) | (has_b & ~has_end)
        found.extend(int(m) for m in subs[~broken.any(axis=1)])
    return found
