import logging

import networkx as nx

from nfoldlib.errors import VerificationError
from .tau_rigid_module import TauRigidModule

logger = logging.getLogger(__name__)


def _hom_to_tau(cat, i, j):
    """dim Hom(X_i, tau X_j); zero when X_j is projective."""
    t = cat.tau_of[j]
    return 0 if t is None else int(cat.hom_dims[i, t])


def enumerate_tau_rigid(cat):
    """
    All basic tau-rigid modules of a catalog.

    A basic module is tau-rigid exactly when its summands are pairwise compatible,
    ``Hom(X_i, tau X_j) = Hom(X_j, tau X_i) = 0``, and each is tau-rigid itself, so the modules are the cliques
    of the compatibility graph, the empty clique giving the zero module.

    Parameters
    ----------
    cat : IndecCatalog

    Returns
    -------
    list of TauRigidModule
        Ordered by number of summands, then indices.

    Raises
    ------
    VerificationError
        If a clique fails the second criterion ``Ext^1(U, Fac U) = 0``.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b`` there are 16 of them.
    """
    return cat.memo(("tau_rigid",), lambda: _tau_rigid(cat))


def _tau_rigid(cat):
    n = len(cat)
    nodes = [i for i in range(n) if _hom_to_tau(cat, i, i) == 0]
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from((i, j) for i in nodes for j in nodes
                         if i < j and _hom_to_tau(cat, i, j) == 0 and _hom_to_tau(cat, j, i) == 0)
    modules = _cliques(cat, graph)
    for U in modules:
        fac = U.fac()
        if cat.ext1_dims[list(U.indices)][:, fac.indices].any():
            raise VerificationError(f"{U.label()} is tau-rigid but has extensions into Fac")
    logger.info("%d basic tau-rigid modules", len(modules))
    return modules


def enumerate_rigid(cat):
    """
    All basic rigid modules (``Ext^1(U, U) = 0``): cliques of the Ext-orthogonality graph.

    Over a hereditary algebra the list equals :func:`enumerate_tau_rigid`.
    """
    ext = cat.ext1_dims
    nodes = [i for i in range(len(cat)) if ext[i, i] == 0]
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from((i, j) for i in nodes for j in nodes if i < j and ext[i, j] == 0 and ext[j, i] == 0)
    modules = _cliques(cat, graph)
    logger.info("%d basic rigid modules", len(modules))
    return modules


def _cliques(cat, graph):
    modules = [TauRigidModule(cat, ())]
    modules += [TauRigidModule(cat, tuple(c)) for c in nx.enumerate_all_cliques(graph)]
    return sorted(modules, key=TauRigidModule.sort_key)
