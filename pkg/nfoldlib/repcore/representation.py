import logging

import numpy as np

from nfoldlib.exactmat import rank, rref, kernel_basis

logger = logging.getLogger(__name__)


class Representation:
    r"""
    A finite-dimensional right module over a bound quiver algebra, given as a quiver representation.

    Parameters
    ----------
    algebra : BoundQuiverAlgebra
        The algebra acting on the module.
    dims : sequence of int
        Dimension of the space at each vertex, in the vertex order of the algebra.
    maps : dict, optional
        Arrow name to matrix of shape ``(dims[target], dims[source])``. Missing arrows act by zero.
    check : bool, optional
        Validate shapes and relations, by default True.

    Raises
    ------
    ValueError
        If a matrix does not conform to `dims`, an arrow is unknown, or a relation does not act by zero.

    Notes
    -----
    Instances are treated as immutable; the stored matrices are reduced copies.
    """

    def __init__(self, algebra, dims, maps=None, check=True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != len(algebra.vertices):
            raise ValueError(f"dimension vector {self.dims} does not match {len(algebra.vertices)} vertices")
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")
        maps = dict(maps or {})
        p = algebra.p
        self.maps = {}
        for a in algebra.arrows:
            shape = (self.dim_at(a.target), self.dim_at(a.source))
            m = maps.pop(a.name, None)
            if m is None:
                self.maps[a.name] = np.zeros(shape, dtype=np.int64)
                continue
            m = np.mod(np.asarray(m, dtype=np.int64), p)
            if m.size == 0:
                m = m.reshape(shape)
            if m.shape != shape:
                raise ValueError(f"matrix of arrow {a.name} has shape {m.shape}, expected {shape}")
            self.maps[a.name] = m
        if maps:
            raise ValueError(f"unknown arrows {sorted(maps)}")
        if check:
            for rel in algebra.relations:
                if self.path_action(rel).any():
                    raise ValueError(f"relation {'*'.join(rel)} does not act by zero")

    @property
    def p(self):
        return self.algebra.p

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def dim_at(self, v):
        return self.dims[self.algebra.vertex_index(v)]

    def offsets(self):
        """Start of each vertex block in the concatenated vector of all vertex spaces."""
        return np.concatenate([[0], np.cumsum(self.dims)]).astype(int)

    def path_action(self, names, source=None):
        """Matrix of the path ``names`` (first arrow first); the identity at `source` for a trivial path."""
        names = tuple(names)
        if not names:
            d = self.dim_at(source)
            return np.eye(d, dtype=np.int64)
        result = self.maps[names[0]]
        for name in names[1:]:
            result = (self.maps[name] @ result) % self.p
        return result

    def key(self):
        """Hashable identity of the concrete matrices, for memo tables."""
        return (self.dims,) + tuple(self.maps[a.name].tobytes() for a in self.algebra.arrows)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.algebra == other.algebra
                and self.dims == other.dims
                and all(np.array_equal(self.maps[a.name], other.maps[a.name]) for a in self.algebra.arrows))

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    def to_dict(self):
        """JSON-ready form: dimension vector and row-major arrow matrices."""
        return {"dims": list(self.dims), "maps": {k: v.tolist() for k, v in self.maps.items()}}

    def intertwiner_system(self, other):
        r"""
        Linear system whose null space is :math:`\mathrm{Hom}(M, N)` for M = self, N = `other`.

        The unknown is the concatenation over vertices of the row-major matrices
        :math:`\varphi_v` of shape ``(N_v, M_v)``; each arrow ``a : s -> t`` contributes the equations
        :math:`N_a \varphi_s - \varphi_t M_a = 0`.

        Returns
        -------
        system : ndarray
            Matrix with one column per unknown.
        offsets : list of int
            Start column of each vertex block (one extra entry for the total).
        """
        if self.algebra != other.algebra:
            raise ValueError("modules over different algebras")
        p = self.p
        sizes = [n * m for n, m in zip(other.dims, self.dims)]
        offsets = [0]
        for s in sizes:
            offsets.append(offsets[-1] + s)
        blocks = []
        for a in self.algebra.arrows:
            s = self.algebra.vertex_index(a.source)
            t = self.algebra.vertex_index(a.target)
            rows = other.dims[t] * self.dims[s]
            if rows == 0:
                continue
            block = np.zeros((rows, offsets[-1]), dtype=np.int64)
            block[:, offsets[s]:offsets[s + 1]] += np.kron(other.maps[a.name], np.eye(self.dims[s], dtype=np.int64))
            block[:, offsets[t]:offsets[t + 1]] -= np.kron(np.eye(other.dims[t], dtype=np.int64), self.maps[a.name].T)
            blocks.append(block % p)
        if blocks:
            system = np.vstack(blocks)
        else:
            system = np.zeros((0, offsets[-1]), dtype=np.int64)
        return system, offsets

    def hom_dim(self, other):
        """Dimension of Hom(self, other)."""
        system, offsets = self.intertwiner_system(other)
        return offsets[-1] - rank(system, self.p)

    def hom_vectors(self, other):
        """Canonical basis of Hom(self, other) as flat vectors, with the vertex offsets of the unknowns."""
        system, offsets = self.intertwiner_system(other)
        return kernel_basis(system, self.p), offsets

    def unflatten(self, other, vector, offsets):
        """Split a flat Hom vector into per-vertex matrices of shape ``(other_v, self_v)``."""
        return [np.asarray(vector[offsets[i]:offsets[i + 1]], dtype=np.int64).reshape(other.dims[i], self.dims[i])
                for i in range(len(self.dims))]


class Submodule:
    """
    An arrow-stable family of subspaces of a representation.

    Parameters
    ----------
    parent : Representation
        The ambient module.
    bases : sequence of array_like
        One matrix per vertex whose rows span the subspace; it is replaced by its reduced row echelon form.
    check : bool, optional
        Verify arrow stability, by default True.

    Raises
    ------
    ValueError
        If a basis has the wrong width or the family is not arrow-stable.
    """

    def __init__(self, parent, bases, check=True):
        self.parent = parent
        p = parent.p
        normalized = []
        self.pivots = []
        for i, (b, d) in enumerate(zip(bases, parent.dims)):
            b = np.asarray(b, dtype=np.int64)
            if b.size == 0:
                b = b.reshape(0, d)
            if b.ndim != 2 or b.shape[1] != d:
                raise ValueError(f"subspace basis at vertex {parent.algebra.vertices[i]} has shape {b.shape}, "
                                 f"expected width {d}")
            r, k, piv = rref(b, p)
            normalized.append(r[:k])
            self.pivots.append(piv)
        self.bases = normalized
        if len(self.bases) != len(parent.dims):
            raise ValueError("one subspace basis per vertex expected")
        if check and not self.is_stable():
            raise ValueError("subspace family is not arrow-stable")

    @classmethod
    def zero(cls, parent):
        return cls(parent, [np.zeros((0, d), dtype=np.int64) for d in parent.dims], check=False)

    @classmethod
    def whole(cls, parent):
        return cls(parent, [np.eye(d, dtype=np.int64) for d in parent.dims], check=False)

    @property
    def dims(self):
        return tuple(b.shape[0] for b in self.bases)

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def is_whole(self):
        return self.dims == self.parent.dims

    def is_stable(self):
        """True if every arrow maps the subspace at its source into the subspace at its target."""
        A = self.parent.algebra
        p = self.parent.p
        for a in A.arrows:
            s = A.vertex_index(a.source)
            t = A.vertex_index(a.target)
            if self.bases[s].shape[0] == 0:
                continue
            image = (self.bases[s] @ self.parent.maps[a.name].T) % p
            if rank(np.vstack([self.bases[t], image]), p) != self.bases[t].shape[0]:
                return False
        return True

    def key(self):
        return tuple(b.tobytes() for b in self.bases) + (self.dims,)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.parent is other.parent and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Submodule(dims={self.dims} in {self.parent.dims})"

    def contains(self, other):
        """True if `other` (a submodule of the same parent) lies inside this one."""
        p = self.parent.p
        for mine, theirs in zip(self.bases, other.bases):
            if theirs.shape[0] and rank(np.vstack([mine, theirs]), p) != mine.shape[0]:
                return False
        return True
