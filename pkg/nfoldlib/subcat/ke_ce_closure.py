import logging

from nfoldlib import constants
from .census import ses_census
from .ext_closure import saturate
from .fac_or_sub_closure import fac_or_sub_closure
from .kernel_closure_suite import end_saturate
from .subcat import ClosureReport, Subcat

logger = logging.getLogger(__name__)


def ke_ce_closure(C, kind="ke", mu=constants.MU):
    """
    Smallest subcategory containing `C` closed under kernels and extensions (``kind='ke'``) or cokernels and
    extensions (``kind='ce'``).

    Kernel (cokernel) saturation and extension saturation alternate until neither adds anything. The result
    agrees with the two-fold torsion-free (torsion) closure.

    Returns
    -------
    ClosureReport
    """
    if kind not in ("ke", "ce"):
        raise ValueError(f"unknown closure kind {kind!r}")
    cat = C.cat
    census = ses_census(cat, mu)
    added, closure = ("a", "sub") if kind == "ke" else ("c", "fac")
    cur = C
    witnesses = {}
    rounds = 0
    while True:
        rounds += 1
        step = end_saturate(cur, census, mu, added,
                            lambda mask: fac_or_sub_closure(Subcat(cat, mask), closure).mask)
        ext = saturate(step.result, census, mu, extension=True)
        for report in (step, ext):
            for i, w in report.witnesses.items():
                witnesses.setdefault(i, w)
        if ext.result == cur:
            break
        cur = ext.result
    logger.debug("%s closure of %s: %s after %d rounds", kind.upper(), C.label(), cur.label(), rounds)
    return ClosureReport(C, cur, rounds, mu, witnesses)
