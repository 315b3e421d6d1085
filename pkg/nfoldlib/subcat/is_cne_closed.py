import numpy as np

from nfoldlib import constants
from .census import ext_census, ses_census, within
from .fac_or_sub_closure import fac_or_sub_closure
from .subcat import Verdict


def is_cne_closed(C, n=1, side="cok", mu=constants.MU):
    """
    Decide whether `C` is closed under extensions and n-cokernels (``side='cok'``) or n-kernels
    (``side='ker'``).

    ``Q_0`` is Fac C and ``Q_k`` collects the cokernels ``c`` of recorded sequences ``0 -> a -> b -> c -> 0`` with
    ``b`` in C and ``a`` in ``Q_{k-1}``; `C` passes when it is extension-closed and contains ``Q_n``. The kernel
    side starts from Sub C and collects kernels ``a`` with ``c`` in ``K_{k-1}``. Positive answers are relative to
    the multiplicity bound `mu`.

    Returns
    -------
    Verdict
        On failure the witness is the offending exact sequence.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if side not in ("cok", "ker"):
        raise ValueError(f"unknown side {side!r}")
    cat = C.cat
    ext = ext_census(cat, mu)
    hit = within(ext.a, C.mask) & within(ext.c, C.mask) & ~within(ext.b, C.mask)
    if hit.any():
        return Verdict(False, ext.labels[int(np.nonzero(hit)[0][0])])
    census = ses_census(cat, mu)
    level = fac_or_sub_closure(C, "fac" if side == "cok" else "sub").mask
    source = None
    for _ in range(n):
        if side == "cok":
            hit = within(census.b, C.mask) & within(census.a, level)
            ends = census.c
        else:
            hit = within(census.b, C.mask) & within(census.c, level)
            ends = census.a
        rows = np.nonzero(hit)[0]
        level = 0
        for k in rows:
            level |= int(ends[k])
        source = {int(k) for k in rows}
    outside = level & ~C.mask
    if not outside:
        return Verdict(True)
    if source is None:
        i = (outside & -outside).bit_length() - 1
        return Verdict(False, f"{cat.labels[i]} is a {'quotient' if side == 'cok' else 'submodule'} of a member")
    ends = census.c if side == "cok" else census.a
    for k in sorted(source):
        if int(ends[k]) & ~C.mask:
            return Verdict(False, census.labels[k])
    return Verdict(False, None)
