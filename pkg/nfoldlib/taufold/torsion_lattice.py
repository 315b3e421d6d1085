import logging
from dataclasses import dataclass

import networkx as nx

from nfoldlib.errors import VerificationError
from nfoldlib.subcat import Subcat, is_torsion_class, right_perp
from .support_tau_tilting import support_tau_tilting

logger = logging.getLogger(__name__)


@dataclass
class TorsionLattice:
    """
    The torsion classes of a representation-finite algebra with their support tau-tilting modules.

    Attributes
    ----------
    cat : IndecCatalog
    classes : list of Subcat
        Torsion classes by size, then members.
    stt : list of TauRigidModule
        ``stt[k]`` is the support tau-tilting module with Fac ``classes[k]``.
    torf_classes : list of Subcat
        ``torf_classes[k]`` is the torsion-free class paired with ``classes[k]``.
    hasse : networkx.DiGraph
        Cover relations between class indices, smaller to larger.
    """
    cat: object
    classes: list
    stt: list
    torf_classes: list
    hasse: nx.DiGraph

    def __len__(self):
        return len(self.classes)

    def index(self, T):
        for k, S in enumerate(self.classes):
            if S == T:
                return k
        raise ValueError(f"{T.label()} is not a torsion class")

    def to_dot(self):
        """Hasse diagram in DOT, nodes named by their class labels."""
        lines = ["digraph torsion_lattice {", "  rankdir=BT;"]
        for k, T in enumerate(self.classes):
            lines.append(f'  "{T.label()}" [tooltip="{self.stt[k].label()}"];')
        for a, b in sorted(self.hasse.edges):
            lines.append(f'  "{self.classes[a].label()}" -> "{self.classes[b].label()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            "classes": [{"label": T.label(), **T.to_dict()} for T in self.classes],
            "stt": [U.label() for U in self.stt],
            "torf_classes": [F.label() for F in self.torf_classes],
            "hasse": sorted([list(e) for e in self.hasse.edges]),
        }


def torsion_lattice(cat):
    """
    Lattice of torsion classes: Fac U over the support tau-tilting modules U.

    Parameters
    ----------
    cat : IndecCatalog

    Returns
    -------
    TorsionLattice

    Raises
    ------
    VerificationError
        If two modules give the same class, a class fails the torsion class test, or the classes are not closed
        under intersection.

    Examples
    --------
    The path algebra of ``2 -> 1`` has 5 torsion classes.
    """
    return cat.memo(("torsion_lattice",), lambda: _build(cat))


def _build(cat):
    pairs = sorted(((U.fac(), U) for U in support_tau_tilting(cat)), key=lambda e: Subcat.sort_key(e[0]))
    classes = [T for T, _ in pairs]
    masks = {T.mask for T in classes}
    if len(masks) != len(classes):
        raise VerificationError("two support tau-tilting modules have the same Fac")
    for T in classes:
        verdict = is_torsion_class(T, "tors")
        if not verdict:
            raise VerificationError(f"Fac of a support tau-tilting module is not a torsion class: {verdict.witness}")
    for T in classes:
        for S in classes:
            if T.mask & S.mask not in masks:
                raise VerificationError(f"{T.label()} and {S.label()} meet outside the lattice")
    order = nx.DiGraph()
    order.add_nodes_from(range(len(classes)))
    order.add_edges_from((a, b) for a, T in enumerate(classes) for b, S in enumerate(classes) if a != b and T <= S)
    hasse = nx.transitive_reduction(order)
    logger.info("torsion lattice: %d classes, %d covers", len(classes), hasse.number_of_edges())
    return TorsionLattice(cat, classes, [U for _, U in pairs], [right_perp(T, 0) for T in classes], hasse)
