import logging

from .co_bongartz import co_bongartz
from .enumerate_tau_rigid import enumerate_tau_rigid

logger = logging.getLogger(__name__)


def support_tau_tilting(cat):
    """
    All basic support tau-tilting modules: the tau-rigid `U` equal to the Ext-projectives of Fac `U`.

    Returns
    -------
    list of TauRigidModule
        In the order of :func:`enumerate_tau_rigid`.
    """
    modules = [U for U in enumerate_tau_rigid(cat) if co_bongartz(U) == U]
    logger.info("%d support tau-tilting modules", len(modules))
    return modules
