import logging

from nfoldlib.errors import VerificationError
from nfoldlib.homalg import cokernel_of
from nfoldlib.repcore import decompose, direct_sum
from nfoldlib.subcat import Subcat, subcat_approximation
from .tau_rigid_module import TauRigidModule
from .torsion_lattice import torsion_lattice

logger = logging.getLogger(__name__)


def ext_progenerator_ftors(T, parts=False):
    """
    Ext-progenerator of a torsion class from the left approximation of the algebra.

    With ``f : A -> T0`` the left minimal add(`T`)-approximation of the regular module and ``T1`` its
    cokernel, the basic part of ``T0 + T1`` is the Ext-progenerator of `T`. ``T0`` and ``T1`` share no summand.

    Parameters
    ----------
    T : Subcat
        A class of the torsion lattice.
    parts : bool, optional
        Also return the summand sets of ``T0`` and ``T1``.

    Returns
    -------
    TauRigidModule or tuple
        ``(module, T0, T1)`` when `parts` is set, the last two as Subcats.

    Raises
    ------
    ValueError
        If `T` is not a torsion class.
    VerificationError
        If ``T0`` and ``T1`` share a summand, ``T1`` leaves `T`, or the result is not the support tau-tilting
        module the lattice pairs with `T`.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, add(P1+S2+P2) gives P1+P2.
    """
    cat = T.cat
    lattice = torsion_lattice(cat)
    paired = lattice.stt[lattice.index(T)]
    regular = direct_sum(*[cat.indecs[i] for i in cat.projectives], algebra=cat.algebra)
    f = subcat_approximation(regular, T, "left")
    top = Subcat.from_indices(cat, f.summands)
    rest = Subcat.from_indices(cat, decompose(cokernel_of(f).target, cat, verify=False))
    if (top & rest).mask:
        raise VerificationError(f"{T.label()}: T0 and T1 share {(top & rest).label()}")
    if not rest <= T:
        raise VerificationError(f"{T.label()}: the cokernel {rest.label()} leaves the class")
    module = TauRigidModule.from_subcat(top | rest)
    if module != paired:
        raise VerificationError(f"{T.label()}: progenerator {module.label()} but the lattice pairs {paired.label()}")
    logger.debug("progenerator of %s: %s + %s", T.label(), top.label(), rest.label())
    if parts:
        return module, top, rest
    return module
