from dataclasses import dataclass, field

from nfoldlib import constants
from nfoldlib.subcat import cok_or_ker_n, enumerate_nfold, ext_projectives, torsion_closure
from .check_star import check_star
from .enumerate_tau_rigid import enumerate_tau_rigid
from .tau_rigid_module import TauRigidModule


@dataclass
class PairingTable:
    """
    Every tau-rigid module with its cok_1, and the two-fold torsion classes outside the image.

    `extra` rows carry the torsion closure, its Ext-projectives and the failing approximation.
    """
    rows: list = field(default_factory=list)
    extra: list = field(default_factory=list)

    def to_text(self):
        width = max([len("U")] + [len(u) for u, _ in self.rows])
        lines = [f"{'U':<{width}}  cok_1 U"]
        lines += [f"{u:<{width}}  {c}" for u, c in self.rows]
        if self.extra:
            lines.append("")
            lines.append("two-fold torsion classes outside the image:")
            for row in self.extra:
                lines.append(f"{row['class']}  T1 = {row['t1']}, P(T1) = {row['p_t1']}, "
                             f"witness ({row['witness'][0]}, {row['witness'][1]})")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {"rows": [{"u": u, "cok1": c} for u, c in self.rows],
                "extra": [dict(row, witness=list(row["witness"])) for row in self.extra]}


def pairing_table(cat, mu=constants.MU):
    """
    The pairing ``U -> cok_1 U`` over all tau-rigid modules, plus the two-fold torsion classes it misses.

    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b`` there are 16 rows and one missed class,
    add(S3+P2).
    """
    table = PairingTable()
    images = set()
    for U in enumerate_tau_rigid(cat):
        C = cok_or_ker_n(U.subcat, 1, "cok", mu)
        images.add(C.mask)
        table.rows.append((U.label(), C.label()))
    for C in enumerate_nfold(cat, 2, "tors", mu):
        if C.mask in images:
            continue
        T = torsion_closure(C, 1, "tors")
        star = check_star(C)
        table.extra.append({
            "class": C.label(),
            "t1": T.label(),
            "p_t1": TauRigidModule.from_subcat(ext_projectives(T)).label(),
            "witness": star.witness if not star else ("", ""),
        })
    return table
