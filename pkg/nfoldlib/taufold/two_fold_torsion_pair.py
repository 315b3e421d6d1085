from dataclasses import dataclass

from nfoldlib import constants
from nfoldlib.errors import VerificationError
from nfoldlib.subcat import Subcat, cok_or_ker_n, nfold_torsion_pair, right_perp


@dataclass
class TwoFoldTorsionPair:
    """``(t2, t1; f2, f1)`` with ``t2 = cok_1 U``, ``t1 = Fac U``."""
    t2: Subcat
    t1: Subcat
    f2: Subcat
    f1: Subcat

    def as_tuple(self):
        return self.t2, self.t1, self.f2, self.f1

    def to_dict(self):
        return {"t2": self.t2.label(), "t1": self.t1.label(), "f2": self.f2.label(), "f1": self.f1.label()}


def two_fold_torsion_pair(U, mu=constants.MU):
    """
    The two-fold torsion pair of a tau-rigid module.

    ``f1`` is the Hom-orthogonal of Fac U and ``f2`` keeps the members of ``f1`` without extensions from
    cok_1 U. Both chains are checked against the orthogonality equations.

    Parameters
    ----------
    U : TauRigidModule
    mu : int, optional
        Multiplicity bound passed to cok_1.

    Returns
    -------
    TwoFoldTorsionPair

    Raises
    ------
    VerificationError
        If an orthogonality equation fails.
    """
    t1 = U.fac()
    t2 = cok_or_ker_n(U.subcat, 1, "cok", mu)
    f1 = right_perp(t1, 0)
    f2 = f1 & right_perp(t2, 1)
    verdict = nfold_torsion_pair([t1, t2], [f1, f2])
    if not verdict:
        raise VerificationError(f"{U.label()}: {verdict.witness}")
    return TwoFoldTorsionPair(t2, t1, f2, f1)
