import logging
import threading

import numpy as np

logger = logging.getLogger(__name__)


class IndecCatalog:
    """
    The indecomposable modules of a representation-finite algebra in canonical order, with their tables.

    Attributes
    ----------
    algebra : BoundQuiverAlgebra
    indecs : list of Representation
        Canonically ordered: total dimension, dimension vector (decreasing lexicographically), then string.
    strings : list of StringWord
        The string of each module.
    labels : list of str
        ``P<v>``, ``S<v>``, ``I<v>`` for structural modules (in that priority), ``M<dims>`` otherwise.
    hom_dims : ndarray
        ``hom_dims[i, j] = dim Hom(X_i, X_j)``.
    ext1_dims : ndarray
        ``ext1_dims[i, j] = dim Ext^1(X_i, X_j)``.
    tau_of : list of int or None
        Index of the translate, None for projectives.
    proj_of, simple_of, inj_of : dict
        Vertex id to catalog index.

    Notes
    -----
    A finished catalog is read-only; ``memo`` caches derived data (censuses, inverses) under a lock so the
    catalog can be shared between worker threads.
    """

    def __init__(self, algebra, indecs, strings, labels, hom_dims, ext1_dims, tau_of, proj_of, simple_of,
                 inj_of):
        self.algebra = algebra
        self.indecs = list(indecs)
        self.strings = list(strings)
        self.labels = list(labels)
        self.hom_dims = np.asarray(hom_dims, dtype=int).reshape(len(self.indecs), len(self.indecs))
        self.ext1_dims = np.asarray(ext1_dims, dtype=int).reshape(len(self.indecs), len(self.indecs))
        self.tau_of = list(tau_of)
        self.proj_of = dict(proj_of)
        self.simple_of = dict(simple_of)
        self.inj_of = dict(inj_of)
        self._memo = {}
        self._lock = threading.RLock()
        self._by_label = {label: i for i, label in enumerate(self.labels)}

    def __len__(self):
        return len(self.indecs)

    def __repr__(self):
        return f"IndecCatalog({len(self)} indecomposables: {', '.join(self.labels)})"

    @property
    def projectives(self):
        """Catalog indices of the indecomposable projectives, in vertex order."""
        return [self.proj_of[v] for v in self.algebra.vertices]

    def is_projective(self, i):
        return self.tau_of[i] is None

    def index(self, label):
        """Catalog index of a label such as ``'P2'``."""
        try:
            return self._by_label[label]
        except KeyError:
            raise ValueError(f"unknown module label {label!r}; known: {', '.join(self.labels)}") from None

    def memo(self, key, factory):
        """Return the cached value for `key`, computing it with `factory()` on first use."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = factory()
        with self._lock:
            return self._memo.setdefault(key, value)

    def to_dict(self):
        return {
            "labels": self.labels,
            "dims": [list(X.dims) for X in self.indecs],
            "strings": [str(w) for w in self.strings],
            "hom_dims": self.hom_dims.tolist(),
            "ext1_dims": self.ext1_dims.tolist(),
            "tau_of": self.tau_of,
        }
