from dataclasses import dataclass, field

from nfoldlib import constants
from nfoldlib.homalg import kernel_of
from nfoldlib.repcore import decompose
from nfoldlib.subcat import Subcat, cok_or_ker_n, subcat_approximation
from .two_fold_torsion_pair import two_fold_torsion_pair


@dataclass
class ApproximationReport:
    """Left and right cok_1 U-approximations of every catalog module."""
    u: str
    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)
    kernels: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {"u": self.u, "left": self.left, "right": self.right, "kernels": self.kernels,
                "failures": list(self.failures)}


def cok_approximations(U, mu=constants.MU):
    """
    Minimal left and right cok_1 U-approximations of every indecomposable.

    The kernel of each right approximation must lie in the ``f2`` class of the two-fold torsion pair of `U`;
    modules where it does not are listed in ``failures``.

    Parameters
    ----------
    U : TauRigidModule
    mu : int, optional

    Returns
    -------
    ApproximationReport
    """
    cat = U.catalog
    target = cok_or_ker_n(U.subcat, 1, "cok", mu)
    f2 = two_fold_torsion_pair(U, mu).f2
    report = ApproximationReport(U.label())
    for i, M in enumerate(cat.indecs):
        label = cat.labels[i]
        left = subcat_approximation(M, target, "left")
        right = subcat_approximation(M, target, "right")
        kernel = Subcat.from_indices(cat, decompose(kernel_of(right).source, cat, verify=False))
        report.left[label] = [cat.labels[j] for j in left.summands]
        report.right[label] = [cat.labels[j] for j in right.summands]
        report.kernels[label] = kernel.label()
        if not kernel <= f2:
            report.failures.append(f"{label}: kernel {kernel.label()} not in {f2.label()}")
    return report
