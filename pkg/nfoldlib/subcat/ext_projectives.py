import logging

from nfoldlib.homalg import kernel_of
from nfoldlib.repcore import decompose
from .subcat import Subcat
from .subcat_approximation import subcat_approximation

logger = logging.getLogger(__name__)


def ext_projectives(C):
    """
    Members ``M`` of `C` with ``Ext^1(M, C) = 0``.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the Ext-projectives of add(P1+S2+P2) are
    add(P1+P2).
    """
    members = C.indices
    ext = C.cat.ext1_dims
    keep = [i for i in members if not ext[i, members].any()]
    return Subcat.from_indices(C.cat, keep)


def ext_progenerator(C):
    """
    Ext-progenerator of an extension-closed subcategory, if it has one.

    Every member ``M`` must be the end of a conflation ``0 -> K -> P_M -> M -> 0`` in `C` with ``P_M`` in add of
    the Ext-projectives: the right minimal approximation by them must be onto with kernel in `C`.

    Parameters
    ----------
    C : Subcat

    Returns
    -------
    Subcat or None
        add of the (basic) progenerator, or None when `C` does not have enough Ext-projectives.
    """
    P = ext_projectives(C)
    cat = C.cat
    for i in (C - P).indices:
        if P.is_empty():
            return None
        f = subcat_approximation(cat.indecs[i], P, "right")
        if not f.is_epi():
            logger.debug("%s: no epimorphism onto %s from its Ext-projectives", C.label(), cat.labels[i])
            return None
        kernel = decompose(kernel_of(f).source, cat, verify=False)
        if not all(j in C for j in kernel):
            logger.debug("%s: the approximation of %s has its kernel outside", C.label(), cat.labels[i])
            return None
    return P
