import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError
from nfoldlib.homalg import extension_middle_terms
from nfoldlib.repcore import decompose, direct_sum, quotient, submodule_lattice, submodule_representation
from .subcat import check_catalog_size, mask_of, uint_masks

logger = logging.getLogger(__name__)


@dataclass
class Census:
    """
    Short exact sequences ``0 -> a -> b -> c -> 0`` between assembled objects, as support bitmasks.

    ``a``, ``b`` and ``c`` are parallel ``uint64`` arrays; `labels` describes each record for witnesses.
    """
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    labels: list

    def __len__(self):
        return len(self.a)

    def __add__(self, other):
        return Census(np.concatenate([self.a, other.a]), np.concatenate([self.b, other.b]),
                      np.concatenate([self.c, other.c]), self.labels + other.labels)

    def inside(self, mask):
        """Boolean selector of the records with all three terms inside `mask`."""
        return within(self.a, mask) & within(self.b, mask) & within(self.c, mask)


def within(masks, mask):
    """Boolean selector of the entries of `masks` that are subsets of `mask`."""
    outside = np.uint64(~int(mask) & ((1 << 64) - 1))
    return (masks & outside) == 0


def union_of(masks):
    """Bitwise union of an array of masks, as an int."""
    if len(masks) == 0:
        return 0
    return int(np.bitwise_or.reduce(masks))


def assembled(n, mu):
    """Every multiset of 1 to `mu` catalog indices, i.e. every direct sum of at most `mu` indecomposables."""
    return [combo for k in range(1, mu + 1) for combo in itertools.combinations_with_replacement(range(n), k)]


def _describe(cat, parts):
    if not parts:
        return "0"
    return "+".join(cat.labels[i] for i in sorted(parts) for _ in range(parts[i]))


def _extension_records(cat, a_combo, c_combo, guard):
    ext = cat.ext1_dims
    if not all(any(ext[c, a] for c in c_combo) for a in a_combo):
        return []
    if not all(any(ext[c, a] for a in a_combo) for c in c_combo):
        return []
    A = direct_sum(*[cat.indecs[i] for i in a_combo])
    C = direct_sum(*[cat.indecs[i] for i in c_combo])
    records = []
    for coeffs, E in extension_middle_terms(C, A, guard)[1:]:
        parts = decompose(E, cat, verify=False)
        a_parts = {i: a_combo.count(i) for i in set(a_combo)}
        c_parts = {i: c_combo.count(i) for i in set(c_combo)}
        text = f"0 -> {_describe(cat, a_parts)} -> {_describe(cat, parts)} -> {_describe(cat, c_parts)} -> 0"
        records.append((mask_of(a_combo), mask_of(parts), mask_of(c_combo), text))
    return records


def _submodule_records(cat, b_combo):
    B = direct_sum(*[cat.indecs[i] for i in b_combo])
    b_parts = {i: b_combo.count(i) for i in set(b_combo)}
    records = []
    for S in submodule_lattice(B):
        if S.is_zero() or S.is_whole():
            continue
        a_parts = decompose(submodule_representation(S)[0], cat, verify=False)
        c_parts = decompose(quotient(B, S), cat, verify=False)
        text = f"0 -> {_describe(cat, a_parts)} -> {_describe(cat, b_parts)} -> {_describe(cat, c_parts)} -> 0"
        records.append((mask_of(a_parts), mask_of(b_combo), mask_of(c_parts), text))
    return records


def _collect(records):
    unique = {}
    for a, b, c, text in records:
        unique.setdefault((a, b, c), text)
    keys = sorted(unique)
    return Census(uint_masks(k[0] for k in keys), uint_masks(k[1] for k in keys), uint_masks(k[2] for k in keys),
                  [unique[k] for k in keys])


def ext_census(cat, mu=constants.MU, guard=constants.EXT_DIM_GUARD, workers=1):
    """
    Every non-split extension ``0 -> A -> E -> C -> 0`` with `A` and `C` direct sums of at most `mu`
    indecomposables, `E` decomposed against the catalog.

    Pairs where some summand of `A` or `C` has no extension with the other side are skipped; their extensions
    are direct sums of smaller ones.
    """
    check_catalog_size(cat)

    def build():
        objects = assembled(len(cat), mu)
        pairs = list(itertools.product(objects, objects))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda pair: _extension_records(cat, pair[0], pair[1], guard), pairs)
            census = _collect(itertools.chain.from_iterable(chunks))
        logger.info("extension census (mu=%d): %d records", mu, len(census))
        return census

    return cat.memo(("ext_census", mu, guard), build)


def sub_census(cat, mu=constants.MU, dim_bound=constants.SUBMODULE_DIM_BOUND, workers=1):
    """
    Every short exact sequence ``0 -> A -> B -> B/A -> 0`` with `B` a direct sum of at most `mu`
    indecomposables and `A` a nonzero proper submodule, both ends decomposed against the catalog.
    """
    check_catalog_size(cat)

    def build():
        objects = assembled(len(cat), mu)
        for combo in objects:
            total = sum(cat.indecs[i].total_dim for i in combo)
            if total > dim_bound:
                raise GuardExceededError(f"dimension bound exceeded: assembled object of dimension {total} "
                                         f"> {dim_bound}")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda combo: _submodule_records(cat, combo), objects)
            census = _collect(itertools.chain.from_iterable(chunks))
        logger.info("submodule census (mu=%d): %d records", mu, len(census))
        return census

    return cat.memo(("sub_census", mu, dim_bound), build)


def ses_census(cat, mu=constants.MU, workers=1):
    """Both censuses together: every recorded short exact sequence."""
    return cat.memo(("ses_census", mu),
                    lambda: ext_census(cat, mu, workers=workers) + sub_census(cat, mu, workers=workers))
