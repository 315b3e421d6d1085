import logging

import numpy as np

from nfoldlib import constants
from .census import ext_census, within
from .subcat import ClosureReport, Subcat

logger = logging.getLogger(__name__)


def ext_closure(C, mu=constants.MU):
    """
    Extension closure of a subcategory, up to the multiplicity bound.

    Middle terms of the recorded extensions between direct sums of at most `mu` members are added until
    nothing changes.

    Parameters
    ----------
    C : Subcat
        The subcategory.
    mu : int, optional
        Multiplicity bound, by default ``constants.MU``.

    Returns
    -------
    ClosureReport
        Each added index carries the extension that brought it in.

    Raises
    ------
    ValueError
        If `mu` is below 1.
    GuardExceededError
        If an Ext dimension exceeds the enumeration guard.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the closure of add(P1+S2) adds P2 through
    ``0 -> P1 -> P2 -> S2 -> 0``.
    """
    if mu < 1:
        raise ValueError(f"multiplicity bound must be at least 1, got {mu}")
    census = ext_census(C.cat, mu)
    return saturate(C, census, mu, extension=True)


def saturate(C, census, mu, extension=True, within_mask=None, quotient_side=None, rounds_limit=None):
    """
    Close `C` under the recorded sequences.

    With ``extension=True`` the middle term is added whenever both ends are in the current class. With
    `quotient_side` set to ``'c'`` (resp. ``'a'``) the end ``c`` (resp. ``a``) is added whenever the middle term
    is in the class and both ends lie in `within_mask`.
    """
    cat = C.cat
    cur = C.mask
    witnesses = {}
    rounds = 0
    inside = np.ones(len(census), dtype=bool) if within_mask is None else census.inside(within_mask)
    while True:
        rounds += 1
        new = cur
        if extension:
            hit = inside & within(census.a, cur) & within(census.c, cur) & ~within(census.b, cur)
            new = record_hits(census, hit, census.b, new, witnesses)
        if quotient_side is not None:
            ends = census.c if quotient_side == "c" else census.a
            hit = inside & within(census.b, cur) & ~within(ends, cur)
            new = record_hits(census, hit, ends, new, witnesses)
        if new == cur or (rounds_limit is not None and rounds >= rounds_limit):
            cur = new
            break
        cur = new
    logger.debug("saturation of %s: %d rounds", C.label(), rounds)
    return ClosureReport(C, Subcat(cat, cur), rounds, mu, witnesses)


def record_hits(census, hit, masks, cur, witnesses):
    for k in np.nonzero(hit)[0]:
        added = int(masks[k]) & ~cur
        i = 0
        while added >> i:
            if added >> i & 1 and i not in witnesses:
                witnesses[i] = census.labels[k]
            i += 1
        cur |= int(masks[k])
    return cur
