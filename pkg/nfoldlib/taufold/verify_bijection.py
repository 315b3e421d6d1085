import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from nfoldlib import constants
from nfoldlib.homalg import global_dim
from nfoldlib.subcat import cok_or_ker_n, enumerate_nfold, ext_progenerator, ext_projectives, is_ice_closed, \
    torsion_closure
from .check_star import check_star
from .co_bongartz import co_bongartz
from .enumerate_tau_rigid import enumerate_rigid, enumerate_tau_rigid
from .ext_progenerator_ftors import ext_progenerator_ftors
from .phi import phi
from .support_tau_tilting import support_tau_tilting
from .tau_rigid_module import TauRigidModule
from .torsion_lattice import torsion_lattice

logger = logging.getLogger(__name__)

_WHICH = ("air", "main", "hereditary")


@dataclass
class BijectionReport:
    """
    Both directions of a bijection with every failed check.

    `forward` maps module labels to class labels and `backward` class labels to module labels. `excluded` lists
    the classes left out of the codomain together with why.
    """
    which: str
    forward: dict = field(default_factory=dict)
    backward: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    excluded: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        """One line, e.g. ``main: 16 ↔ 16, round-trips OK, excluded: add(S3+P2)``."""
        text = f"{self.which}: {len(self.forward)} ↔ {len(self.backward)}, "
        text += "round-trips OK" if self.ok else f"{len(self.failures)} failures"
        if self.excluded:
            text += ", excluded: " + ", ".join(self.excluded)
        return text

    def to_dict(self):
        return {
            "which": self.which,
            "forward": self.forward,
            "backward": self.backward,
            "failures": list(self.failures),
            "excluded": self.excluded,
            "counts": self.counts,
            "ok": self.ok,
        }


def verify_bijection(cat, which="main", mu=constants.MU, workers=1):
    """
    Check a bijection between modules and subcategories in both directions.

    ``'air'``: support tau-tilting modules and torsion classes via Fac and the Ext-projectives, with the
    left-approximation construction of the progenerator as a second route. ``'main'``: tau-rigid modules and
    two-fold torsion classes satisfying the approximation condition, via cok_1 and :func:`phi`, together with
    the commuting legs through the co-Bongartz completion and the torsion closure. ``'hereditary'``: rigid
    modules and ICE-closed subcategories with enough Ext-projectives.

    Parameters
    ----------
    cat : IndecCatalog
    which : {'air', 'main', 'hereditary'}
    mu : int, optional
    workers : int, optional
        Threads for the per-element checks; the report does not depend on it.

    Returns
    -------
    BijectionReport

    Raises
    ------
    ValueError
        On an unknown `which`, or ``'hereditary'`` over an algebra of global dimension above 1.
    """
    if which not in _WHICH:
        raise ValueError(f"unknown bijection {which!r}; expected one of {', '.join(_WHICH)}")
    start = time.perf_counter()
    report = BijectionReport(which)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        if which == "air":
            _air(cat, report, pool)
        elif which == "main":
            _main(cat, report, pool, mu)
        else:
            _hereditary(cat, report, pool, mu)
    report.elapsed = time.perf_counter() - start
    logger.info("%s (%.2fs)", report.summary(), report.elapsed)
    return report


def _merge(report, results):
    for key, value, failures in results:
        report.forward[key] = value
        report.failures.extend(failures)


def _merge_back(report, results):
    for key, value, failures in results:
        if value is None:
            report.excluded[key] = failures[0] if failures else ""
            continue
        report.backward[key] = value
        report.failures.extend(failures)


def _air(cat, report, pool):
    lattice = torsion_lattice(cat)
    stt = support_tau_tilting(cat)

    def forward(U):
        T = U.fac()
        failures = []
        if TauRigidModule.from_subcat(ext_projectives(T)) != U:
            failures.append(f"P(Fac {U.label()}) != {U.label()}")
        return U.label(), T.label(), failures

    def backward(k):
        T = lattice.classes[k]
        P = TauRigidModule.from_subcat(ext_projectives(T))
        failures = []
        if P.fac() != T:
            failures.append(f"Fac P({T.label()}) != {T.label()}")
        if P != lattice.stt[k]:
            failures.append(f"P({T.label()}) = {P.label()} but the lattice pairs {lattice.stt[k].label()}")
        other = ext_progenerator_ftors(T)
        if other != P:
            failures.append(f"{T.label()}: left-approximation progenerator {other.label()} != {P.label()}")
        return T.label(), P.label(), failures

    _merge(report, pool.map(forward, stt))
    _merge_back(report, pool.map(backward, range(len(lattice))))
    report.counts = {"stt": len(stt), "tors": len(lattice)}


def _main(cat, report, pool, mu):
    rigid = enumerate_tau_rigid(cat)
    classes = enumerate_nfold(cat, 2, "tors", mu)
    masks = {C.mask for C in classes}
    stt = set(support_tau_tilting(cat))

    def forward(U):
        C = cok_or_ker_n(U.subcat, 1, "cok", mu)
        fac = U.fac()
        failures = []
        if C.mask not in masks:
            failures.append(f"cok_1 {U.label()} = {C.label()} is not a two-fold torsion class")
        if phi(C) != U:
            failures.append(f"phi(cok_1 {U.label()}) = {phi(C).label()}")
        star = check_star(C)
        if not star:
            failures.append(f"cok_1 {U.label()} fails the approximation condition at {star.witness}")
        if co_bongartz(U).fac() != fac:
            failures.append(f"Fac of the completion of {U.label()} differs from Fac {U.label()}")
        if torsion_closure(C, 1, "tors") != fac:
            failures.append(f"T1(cok_1 {U.label()}) != Fac {U.label()}")
        if U in stt and C != fac:
            failures.append(f"{U.label()} is support tau-tilting but cok_1 != Fac")
        return U.label(), C.label(), failures

    def backward(C):
        star = check_star(C)
        if not star:
            return C.label(), None, [f"fails the approximation condition: {star.witness}"]
        U = phi(C)
        failures = []
        again = cok_or_ker_n(U.subcat, 1, "cok", mu)
        if again != C:
            failures.append(f"cok_1 phi({C.label()}) = {again.label()}")
        return C.label(), U.label(), failures

    _merge(report, pool.map(forward, rigid))
    _merge_back(report, pool.map(backward, classes))
    images = set(report.forward.values())
    if images != set(report.backward):
        report.failures.append("the image of cok_1 is not the set of classes satisfying the condition")
    report.counts = {"tau_rigid": len(rigid), "two_fold": len(classes), "condition": len(report.backward)}


def _hereditary(cat, report, pool, mu):
    gd = global_dim(cat.algebra)
    if gd is None or gd > 1:
        raise ValueError(f"hereditary bijection needs global dimension at most 1, got {gd}")
    rigid = enumerate_rigid(cat)
    if rigid != enumerate_tau_rigid(cat):
        report.failures.append("rigid and tau-rigid modules differ")
    classes = enumerate_nfold(cat, 2, "tors", mu)

    def forward(U):
        C = cok_or_ker_n(U.subcat, 1, "cok", mu)
        failures = []
        if TauRigidModule.from_subcat(ext_projectives(C)) != U:
            failures.append(f"P(cok_1 {U.label()}) != {U.label()}")
        return U.label(), C.label(), failures

    def backward(C):
        ice = is_ice_closed(C, "cok", mu)
        if not ice:
            return C.label(), None, [f"not ICE-closed: {ice.witness}"]
        if ext_progenerator(C) is None:
            return C.label(), None, ["not enough Ext-projectives"]
        U = TauRigidModule.from_subcat(ext_projectives(C))
        again = cok_or_ker_n(U.subcat, 1, "cok", mu)
        failures = [] if again == C else [f"cok_1 P({C.label()}) = {again.label()}"]
        return C.label(), U.label(), failures

    _merge(report, pool.map(forward, rigid))
    _merge_back(report, pool.map(backward, classes))
    if set(report.forward.values()) != set(report.backward):
        report.failures.append("the image of cok_1 is not the set of ICE-closed classes")
    report.counts = {"rigid": len(rigid), "two_fold": len(classes), "ice": len(report.backward)}
