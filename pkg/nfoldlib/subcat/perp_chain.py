import logging
from dataclasses import dataclass

import numpy as np

from nfoldlib import constants
from nfoldlib.homalg import ext_dim
from .census import ses_census
from .ext_closure import saturate
from .is_torsion_class import is_torsion_class
from .subcat import Subcat, Verdict

logger = logging.getLogger(__name__)


@dataclass
class PerpChain:
    """
    The chain of orthogonal classes built from a descending chain.

    `classes[i - 1]` is the i-th class; `verified[i - 1]` records whether it is a torsion (torsion-free) class of
    the previous one, or of the whole module category for the first.
    """
    side: str
    source: list
    classes: list
    verified: list

    def __len__(self):
        return len(self.classes)

    def to_dict(self):
        return {
            "side": self.side,
            "source": [X.label() for X in self.source],
            "classes": [T.label() for T in self.classes],
            "verified": list(self.verified),
        }


def ext_table(cat, j):
    """``table[a, b] = dim Ext^j(X_a, X_b)`` over the catalog, with ``j = 0`` giving Hom."""
    if j == 0:
        return cat.hom_dims
    if j == 1:
        return cat.ext1_dims
    return cat.memo(("ext_table", j),
                    lambda: np.array([[ext_dim(X, Y, j) for Y in cat.indecs] for X in cat.indecs], dtype=int))


def left_perp(X, j):
    """Indecomposables ``M`` with ``Ext^j(M, X) = 0`` for every member ``X`` (``j = 0``: no maps into `X`)."""
    table = ext_table(X.cat, j)
    cols = X.indices
    keep = ~table[:, cols].any(axis=1)
    return Subcat.from_indices(X.cat, np.nonzero(keep)[0])


def right_perp(X, j):
    """Indecomposables ``M`` with ``Ext^j(X, M) = 0`` for every member ``X``."""
    table = ext_table(X.cat, j)
    rows = X.indices
    keep = ~table[rows, :].any(axis=0)
    return Subcat.from_indices(X.cat, np.nonzero(keep)[0])


def perp_chain(chain, side="tors", mu=constants.MU):
    """
    Torsion (``side='tors'``) or torsion-free (``side='torf'``) chain orthogonal to a descending chain.

    With ``side='tors'`` the i-th class is the intersection of ``perp_{j-1}`` from the left of ``chain[j - 1]``
    for ``j <= i``, with ``perp_0`` meaning Hom-orthogonal; ``side='torf'`` takes right orthogonals.

    Parameters
    ----------
    chain : list of Subcat
        Descending: each entry contains the next.
    side : {'tors', 'torf'}
    mu : int, optional
        Multiplicity bound of the relative verification.

    Returns
    -------
    PerpChain

    Raises
    ------
    ValueError
        If the chain is empty or not descending.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, the chain ``[add(S2)]`` gives add(P1+S3+P3).
    """
    if side not in ("tors", "torf"):
        raise ValueError(f"unknown side {side!r}")
    if not chain:
        raise ValueError("empty chain")
    for upper, lower in zip(chain, chain[1:]):
        if not lower <= upper:
            raise ValueError(f"chain is not descending: {lower.label()} is not inside {upper.label()}")
    perp = left_perp if side == "tors" else right_perp
    cat = chain[0].cat
    classes = []
    cur = Subcat.full(cat)
    for j, X in enumerate(chain):
        cur = cur & perp(X, j)
        classes.append(cur)
    verified = [bool(is_torsion_class(classes[0], side, mu))]
    census = ses_census(cat, mu) if len(classes) > 1 else None
    for previous, T in zip(classes, classes[1:]):
        report = saturate(T, census, mu, extension=True, within_mask=previous.mask,
                          quotient_side="c" if side == "tors" else "a")
        verified.append(report.result == T)
    logger.debug("%s perp chain: %s", side, [T.label() for T in classes])
    return PerpChain(side, list(chain), classes, verified)


def nfold_torsion_pair(tors_chain, torf_chain):
    """
    Check the orthogonality equations of an n-fold torsion pair.

    ``tors_chain[i - 1]`` must equal the intersection of the left ``perp_{j-1}`` of ``torf_chain[j - 1]`` for
    ``j <= i``, and dually for ``torf_chain``.

    Parameters
    ----------
    tors_chain, torf_chain : list of Subcat
        ``T_1, ..., T_n`` and ``F_1, ..., F_n``.

    Returns
    -------
    Verdict
        On failure the witness names the first equation that does not hold.
    """
    if len(tors_chain) != len(torf_chain) or not tors_chain:
        raise ValueError("the two chains must be nonempty and of equal length")
    cat = tors_chain[0].cat
    left = Subcat.full(cat)
    right = Subcat.full(cat)
    for i, (T, F) in enumerate(zip(tors_chain, torf_chain), start=1):
        left = left & left_perp(F, i - 1)
        right = right & right_perp(T, i - 1)
        if left != T:
            return Verdict(False, f"T{i} = {T.label()} but the orthogonal of the F side is {left.label()}")
        if right != F:
            return Verdict(False, f"F{i} = {F.label()} but the orthogonal of the T side is {right.label()}")
    return Verdict(True)
