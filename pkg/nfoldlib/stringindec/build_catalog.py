import logging

import numpy as np

from nfoldlib import constants
from nfoldlib.errors import DecompositionError
from nfoldlib.homalg import ext_dim, extension_middle_terms, tau
from nfoldlib.quiverlang import validate_string_algebra
from nfoldlib.repcore import decompose, is_isomorphic, structural_module
from .catalog import IndecCatalog
from .enumerate_strings import enumerate_strings
from .string_module import string_module

logger = logging.getLogger(__name__)

_KINDS = (("P", "projective"), ("S", "simple"), ("I", "injective"))


def build_catalog(A, seed=constants.SEED):
    """
    Catalog of all indecomposable modules of a representation-finite string algebra.

    Parameters
    ----------
    A : BoundQuiverAlgebra
        The algebra.
    seed : int, optional
        Seed of the randomized isomorphism tests that identify the structural modules.

    Returns
    -------
    IndecCatalog
        With Hom, Ext^1 and translate tables filled in.

    Raises
    ------
    UnsupportedAlgebraError
        If `A` is not a string algebra or has a band.

    Examples
    --------
    For ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b`` the labels are
    ``['P1', 'S2', 'S3', 'P2', 'P3']``.
    """
    validate_string_algebra(A)
    strings = enumerate_strings(A)
    entries = [(string_module(A, w), w) for w in strings]
    entries.sort(key=lambda e: (e[0].total_dim, tuple(-d for d in e[0].dims), e[1].key(),
                                A.vertex_index(e[1].start)))
    indecs = [M for M, _ in entries]
    words = [w for _, w in entries]

    labels = [None] * len(indecs)
    found = {kind: {} for _, kind in _KINDS}
    for prefix, kind in _KINDS:
        for v in A.vertices:
            X = structural_module(A, kind, v)
            matches = [i for i, M in enumerate(indecs) if M.dims == X.dims and is_isomorphic(M, X, seed=seed)]
            if len(matches) != 1:
                raise DecompositionError(f"{kind} module at vertex {v} matches {len(matches)} strings")
            i = matches[0]
            found[kind][v] = i
            if labels[i] is None:
                labels[i] = f"{prefix}{v}"
    used = set(labels)
    for i, M in enumerate(indecs):
        if labels[i] is None:
            base = "M" + "".join(str(d) for d in M.dims)
            label, k = base, 1
            while label in used:
                k += 1
                label = f"{base}_{k}"
            labels[i] = label
            used.add(label)

    n = len(indecs)
    hom_dims = np.array([[X.hom_dim(Y) for Y in indecs] for X in indecs], dtype=int).reshape(n, n)
    ext1_dims = np.array([[ext_dim(X, Y) for Y in indecs] for X in indecs], dtype=int).reshape(n, n)
    projective = set(found["projective"].values())
    cat = IndecCatalog(A, indecs, words, labels, hom_dims, ext1_dims, [None] * n, found["projective"],
                       found["simple"], found["injective"])
    for i, X in enumerate(indecs):
        if i in projective:
            continue
        parts = decompose(tau(X), cat)
        if sum(parts.values()) != 1:
            raise DecompositionError(f"translate of {labels[i]} is not indecomposable: {dict(parts)}")
        cat.tau_of[i] = next(iter(parts))
    logger.info("catalog with %d indecomposables: %s", n, ", ".join(labels))
    return cat


def audit_catalog(cat):
    """
    Decompose the middle term of every extension between catalog members.

    Returns
    -------
    int
        Number of middle terms checked.

    Raises
    ------
    DecompositionError
        If some middle term does not decompose, i.e. the catalog is incomplete.
    """
    checked = 0
    for i, C in enumerate(cat.indecs):
        for j, X in enumerate(cat.indecs):
            if cat.ext1_dims[i, j] == 0:
                continue
            for _, E in extension_middle_terms(C, X):
                decompose(E, cat)
                checked += 1
    logger.info("audited %d middle terms", checked)
    return checked
