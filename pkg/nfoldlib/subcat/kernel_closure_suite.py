import logging
from dataclasses import dataclass

from nfoldlib import constants
from .census import ses_census, within
from .ext_closure import record_hits, saturate
from .fac_or_sub_closure import fac_or_sub_closure
from .subcat import ClosureReport, Subcat
from .torsion_closure import torsion_closure

logger = logging.getLogger(__name__)

@dataclass
class SuiteReport:
    """The three closures of a kernel (cokernel) closure suite."""
    kind: str
    relative: ClosureReport
    restricted: ClosureReport
    full: ClosureReport

    @property
    def agree(self):
        return self.relative.result == self.restricted.result == self.full.result

    def to_dict(self):
        return {
            "kind": self.kind,
            "agree": self.agree,
            "relative": self.relative.to_dict(),
            "restricted": self.restricted.to_dict(),
            "full": self.full.to_dict(),
        }

def kernel_closure_suite(X, mu=constants.MU):
    """
    Compute the kernel closure of `X` three ways.

    ``relative`` is the admissible-subobject closure of `X` inside its torsion-free closure; ``restricted`` closes
    under kernels of maps into members of `X` only; ``full`` closes under all kernels of maps between objects
    of the class. The three always coincide; ``SuiteReport.agree`` checks it.

    Parameters
    ----------
    X : Subcat
    mu : int, optional
        Multiplicity bound of the census.

    Returns
    -------
    SuiteReport

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, add(P2+P3) closes to add(P1+P2+P3): P1 is the
    kernel of ``P2 -> S2``.
    """
    return _suite(X, "kernel", mu)

def cokernel_closure_suite(X, mu=constants.MU):
    """Dual of :func:`kernel_closure_suite`: admissible quotients in the torsion closure, and cokernels."""
    return _suite(X, "cokernel", mu)

def _suite(X, kind, mu):
    census = ses_census(X.cat, mu)
    if kind == "kernel":
        ambient, closure, added = torsion_closure(X, 1, "torf", mu), "sub", "a"
    else:
        ambient, closure, added = torsion_closure(X, 1, "tors", mu), "fac", "c"
    relative = saturate(X, census, mu, extension=False, within_mask=ambient.mask, quotient_side=added)
    fixed = fac_or_sub_closure(X, closure).mask
    restricted = end_saturate(X, census, mu, added, lambda cur: fixed)
    full = end_saturate(X, census, mu, added, lambda cur: fac_or_sub_closure(Subcat(X.cat, cur), closure).mask)
    report = SuiteReport(kind, relative, restricted, full)
    if not report.agree:
        logger.warning("%s closures of %s disagree: %s, %s, %s", kind, X.label(), relative.result.label(),
                       restricted.result.label(), full.result.label())
    return report

def end_saturate(C, census, mu, added, image_mask, rounds_limit=None):
    """
    Close `C` under kernels (``added='a'``) or cokernels (``added='c'``).

    A recorded ``0 -> a -> b -> c -> 0`` with ``b`` in the class is the kernel (cokernel) of a map whose image
    ``c`` (``a``) is a submodule (quotient) of an object of ``image_mask(current)``.
    """
    cur = C.mask
    witnesses = {}
    rounds = 0
    ends, images = (census.a, census.c) if added == "a" else (census.c, census.a)
    while True:
        rounds += 1
        hit = within(census.b, cur) & within(images, image_mask(cur)) & ~within(ends, cur)
        new = record_hits(census, hit, ends, cur, witnesses) if hit.any() else cur
        if new == cur or (rounds_limit is not None and rounds >= rounds_limit):
            cur = new
            break
        cur = new
    return ClosureReport(C, Subcat(C.cat, cur), rounds, mu, witnesses)
