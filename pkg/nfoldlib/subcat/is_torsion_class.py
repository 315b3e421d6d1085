from nfoldlib import constants
from .ext_closure import ext_closure
from .fac_or_sub_closure import fac_or_sub_closure
from .subcat import Verdict


def is_torsion_class(C, side="tors", mu=constants.MU):
    """
    Decide whether `C` is a torsion class (closed under quotients and extensions) or, for ``side='torf'``,
    a torsion-free class (closed under submodules and extensions).

    Returns
    -------
    Verdict
        On failure the witness names the missing module and how it arises.
    """
    if side not in ("tors", "torf"):
        raise ValueError(f"unknown side {side!r}")
    closed = fac_or_sub_closure(C, "fac" if side == "tors" else "sub")
    extra = closed - C
    if extra.mask:
        kind = "quotient" if side == "tors" else "submodule"
        return Verdict(False, f"{C.cat.labels[extra.indices[0]]} is a {kind} of a member")
    report = ext_closure(C, mu)
    extra = report.result - C
    if extra.mask:
        i = extra.indices[0]
        return Verdict(False, f"{C.cat.labels[i]} is an extension: {report.witnesses[i]}")
    return Verdict(True)
