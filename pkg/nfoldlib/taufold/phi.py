from nfoldlib.subcat import ext_projectives, torsion_closure
from .tau_rigid_module import TauRigidModule


def phi(C):
    """
    The tau-rigid module of a two-fold torsion class: the members of `C` that are Ext-projective in its
    torsion closure.

    Parameters
    ----------
    C : Subcat

    Returns
    -------
    TauRigidModule

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, add(P2+S3+P3) gives P2+P3.
    """
    return TauRigidModule.from_subcat(C & ext_projectives(torsion_closure(C, 1, "tors")))
