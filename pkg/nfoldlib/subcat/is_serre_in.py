import numpy as np

from nfoldlib import constants
from .census import ses_census, within
from .subcat import Verdict


def is_serre_in(C, T, mu=constants.MU):
    """
    Decide whether `C` is a Serre subcategory of the extension-closed `T`.

    For every recorded conflation ``0 -> a -> b -> c -> 0`` with all terms in `T`, ``b`` must lie in `C` exactly
    when ``a`` and ``c`` do.

    Returns
    -------
    Verdict
        On failure the witness is the offending conflation.

    Raises
    ------
    ValueError
        If `C` is not contained in `T`.
    """
    if not C <= T:
        raise ValueError(f"{C.label()} is not contained in {T.label()}")
    census = ses_census(C.cat, mu)
    inside = census.inside(T.mask)
    ends = within(census.a, C.mask) & within(census.c, C.mask)
    middle = within(census.b, C.mask)
    hit = inside & (ends != middle)
    if hit.any():
        return Verdict(False, census.labels[int(np.nonzero(hit)[0][0])])
    return Verdict(True)


def is_ice_closed(C, side="cok", mu=constants.MU):
    """
    Decide whether `C` is closed under images, cokernels and extensions (``side='cok'``), or images, kernels and
    extensions (``side='ker'``): CE-closed (KE-closed) and Serre in its torsion (torsion-free) closure.
    """
    from .is_cne_closed import is_cne_closed
    from .torsion_closure import torsion_closure
    verdict = is_cne_closed(C, 1, side, mu)
    if not verdict:
        return verdict
    T = torsion_closure(C, 1, "tors" if side == "cok" else "torf", mu)
    return is_serre_in(C, T, mu)
