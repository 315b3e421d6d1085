import logging

from nfoldlib import constants
from .census import ses_census
from .ext_closure import saturate
from .subcat import Subcat

logger = logging.getLogger(__name__)


def torsion_closure(C, n=1, side="tors", mu=constants.MU):
    """
    Smallest n-fold torsion (``side='tors'``) or torsion-free (``side='torf'``) class containing `C`.

    The one-fold closure is the intersection of the torsion (torsion-free) classes of the lattice that contain
    `C`. For ``n >= 2`` the closure is taken inside ``E``, the ``(n - 1)``-fold closure: admissible quotients
    (subobjects) in ``E`` and extensions are saturated.

    Parameters
    ----------
    C : Subcat
    n : int, optional
        Fold, at least 1.
    side : {'tors', 'torf'}
    mu : int, optional
        Multiplicity bound of the censuses used for ``n >= 2``.

    Returns
    -------
    Subcat

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the torsion class generated by add(P2+S3) is
    add(S2+S3+P2+P3).
    """
    if n < 1:
        raise ValueError(f"fold must be at least 1, got {n}")
    if side not in ("tors", "torf"):
        raise ValueError(f"unknown side {side!r}")
    cat = C.cat
    if n == 1:
        from nfoldlib.taufold.torsion_lattice import torsion_lattice
        classes = torsion_lattice(cat).classes if side == "tors" else torsion_lattice(cat).torf_classes
        result = Subcat.full(cat)
        for T in classes:
            if C <= T:
                result = result & T
        return result
    E = torsion_closure(C, n - 1, side, mu)
    census = ses_census(cat, mu)
    report = saturate(C, census, mu, extension=True, within_mask=E.mask,
                      quotient_side="c" if side == "tors" else "a")
    logger.debug("%d-fold %s closure of %s is %s", n, side, C.label(), report.result.label())
    return report.result
