import logging

from nfoldlib import constants
from nfoldlib.errors import VerificationError
from nfoldlib.homalg import cokernel_of
from nfoldlib.repcore import decompose
from nfoldlib.subcat import Subcat, cok_or_ker_n, ext_progenerator, subcat_approximation
from .co_bongartz import co_bongartz
from .tau_rigid_module import TauRigidModule

logger = logging.getLogger(__name__)


def progenerator_of_cok1(U, mu=constants.MU, parts=False):
    """
    Ext-progenerator of cok_1 U.

    ``P`` is the co-Bongartz completion of `U` and ``f : P -> U^P`` its left minimal cok_1 U-approximation; the
    basic part of ``U^P + C1`` with ``C1 = Cok f`` is the progenerator. The result is checked against the
    Ext-projectives of cok_1 U computed directly.

    Parameters
    ----------
    U : TauRigidModule
    mu : int, optional
        Multiplicity bound passed to cok_1.
    parts : bool, optional
        Also return the summand sets of ``U^P`` and ``C1``.

    Returns
    -------
    TauRigidModule or tuple

    Raises
    ------
    VerificationError
        If the two routes disagree or ``U^P`` and ``C1`` share a summand.
    """
    cat = U.catalog
    target = cok_or_ker_n(U.subcat, 1, "cok", mu)
    f = subcat_approximation(co_bongartz(U).module, target, "left")
    top = Subcat.from_indices(cat, f.summands)
    rest = Subcat.from_indices(cat, decompose(cokernel_of(f).target, cat, verify=False))
    if (top & rest).mask:
        raise VerificationError(f"{U.label()}: U^P and C1 share {(top & rest).label()}")
    module = TauRigidModule.from_subcat(top | rest)
    direct = ext_progenerator(target)
    if direct is None or direct != module.subcat:
        found = "none" if direct is None else direct.label()
        raise VerificationError(f"progenerator of cok_1 {U.label()}: {module.label()} but Ext-projectives give "
                                f"{found}")
    logger.debug("progenerator of cok_1 %s: %s", U.label(), module.label())
    if parts:
        return module, top, rest
    return module
