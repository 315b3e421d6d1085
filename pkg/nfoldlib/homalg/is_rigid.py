from .ext_dim import ext_dim
from .tau import tau


def is_rigid(M):
    """True if Ext^1(M, M) vanishes."""
    return ext_dim(M, M) == 0


def is_tau_rigid(M):
    """True if Hom(M, tau M) vanishes."""
    return M.hom_dim(tau(M)) == 0
