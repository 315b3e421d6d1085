from nfoldlib.subcat import ext_projectives
from .tau_rigid_module import TauRigidModule


def co_bongartz(U):
    """
    Co-Bongartz completion of a tau-rigid module: the basic Ext-progenerator of Fac `U`.

    The result is support tau-tilting with the same Fac as `U`; a support tau-tilting `U` is returned unchanged.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the completion of P2 is P2+S2.
    """
    return TauRigidModule.from_subcat(ext_projectives(U.fac()))
