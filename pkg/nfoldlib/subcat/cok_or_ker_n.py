import itertools
import logging

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import GuardExceededError
from nfoldlib.homalg import cokernel_of, hom_basis, kernel_of
from nfoldlib.repcore import decompose, direct_sum
from .fac_or_sub_closure import fac_or_sub_closure
from .subcat import ClosureReport, Subcat
from .subcat_approximation import subcat_approximation

logger = logging.getLogger(__name__)


def cok_or_ker_n(U, n, side="cok", mu=constants.MU, report=False, hom_guard=constants.HOM_ENUM_GUARD):
    """
    The n-cokernels (``side='cok'``) or n-kernels (``side='ker'``) of exact sequences in add(`U`).

    ``cok_0`` is Fac U. For ``n >= 1`` an indecomposable ``M`` belongs to ``cok_n`` when the right minimal
    add(U)-approximation of ``M`` is onto with kernel in ``cok_{n-1}``; this is exact when
    ``Ext^1(U, Fac U) = 0``. Otherwise epimorphisms from direct sums of at most `mu` members are also tried and
    the answer is flagged as bounded. The kernel side is dual (left approximations, cokernels, Sub U).

    Parameters
    ----------
    U : Subcat
    n : int
        At least 0.
    side : {'cok', 'ker'}
    mu : int, optional
        Multiplicity bound of the fallback search.
    report : bool, optional
        Return a ClosureReport instead of the Subcat.
    hom_guard : int, optional
        Largest Hom space enumerated by the fallback search.

    Returns
    -------
    Subcat or ClosureReport

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, ``cok_1`` of add(P1+P2) is add(P1+S2+P2).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if side not in ("cok", "ker"):
        raise ValueError(f"unknown side {side!r}")
    cat = U.cat
    base = fac_or_sub_closure(U, "fac" if side == "cok" else "sub")
    ext = cat.ext1_dims
    if side == "cok":
        exact = all(ext[i, j] == 0 for i in U for j in base)
    else:
        exact = all(ext[j, i] == 0 for i in U for j in base)
    if not exact:
        logger.warning("%s_%d of %s uses the bounded search (mu=%d)", side, n, U.label(), mu)
    witnesses = {}
    current = base
    for level in range(1, n + 1):
        members = []
        for j, X in enumerate(cat.indecs):
            found = _via_approximation(X, U, current, side)
            if found is None and not exact:
                found = _via_search(X, U, current, side, mu, hom_guard)
            if found is not None:
                members.append(j)
                if level == n:
                    witnesses[j] = found
        current = Subcat.from_indices(cat, members)
    if report:
        return ClosureReport(U, current, n, mu, witnesses, exact=exact)
    return current


def _via_approximation(X, U, previous, side):
    f = subcat_approximation(X, U, "right" if side == "cok" else "left")
    if side == "cok":
        if not f.is_epi():
            return None
        rest = kernel_of(f).source
    else:
        if not f.is_mono():
            return None
        rest = cokernel_of(f).target
    parts = decompose(rest, U.cat, verify=False)
    if all(i in previous for i in parts):
        return _sequence(U.cat, f.summands, parts, side)
    return None


def _via_search(X, U, previous, side, mu, hom_guard):
    cat = U.cat
    p = X.p
    for k in range(1, mu + 1):
        for combo in itertools.combinations_with_replacement(U.indices, k):
            Z = direct_sum(*[cat.indecs[i] for i in combo])
            space = hom_basis(Z, X) if side == "cok" else hom_basis(X, Z)
            if p ** space.dim > hom_guard:
                raise GuardExceededError(f"Hom space of dimension {space.dim} exceeds the search guard {hom_guard}")
            for coeffs in itertools.product(range(p), repeat=space.dim):
                f = space.element(np.asarray(coeffs, dtype=np.int64))
                if side == "cok":
                    if not f.is_epi():
                        continue
                    rest = kernel_of(f).source
                else:
                    if not f.is_mono():
                        continue
                    rest = cokernel_of(f).target
                parts = decompose(rest, cat, verify=False)
                if all(i in previous for i in parts):
                    return _sequence(cat, combo, parts, side)
    return None


def _sequence(cat, summands, parts, side):
    middle = "+".join(cat.labels[i] for i in summands) or "0"
    rest = "+".join(cat.labels[i] for i in sorted(parts) for _ in range(parts[i])) or "0"
    if side == "cok":
        return f"0 -> {rest} -> {middle} -> M -> 0"
    return f"0 -> M -> {middle} -> {rest} -> 0"
