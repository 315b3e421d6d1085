import numpy as np

from nfoldlib.exactmat import rank, row_space, kernel_basis
from nfoldlib.repcore import Submodule, direct_sum, quotient, submodule_representation
from nfoldlib.repcore.quotient import projection_matrices


class ModuleMap:
    """
    A homomorphism of representations, one matrix per vertex.

    Parameters
    ----------
    source, target : Representation
        Domain and codomain over the same algebra.
    mats : sequence of array_like
        Per vertex, a matrix of shape ``(target.dims[v], source.dims[v])``.
    check : bool, optional
        Verify shapes and the intertwining condition, by default True.
    summands : sequence of int, optional
        Catalog or addset indices of the summands of the source (right approximations) or target (left
        approximations), in block order.
    summand_modules : sequence of Representation, optional
        The summands themselves, matching `summands`.

    Raises
    ------
    ValueError
        If a matrix has the wrong shape or the family does not commute with an arrow.
    """

    def __init__(self, source, target, mats, check=True, summands=None, summand_modules=None):
        if source.algebra != target.algebra:
            raise ValueError("module map between modules over different algebras")
        self.source = source
        self.target = target
        p = source.p
        self.mats = []
        for i, (m, dt, ds) in enumerate(zip(mats, target.dims, source.dims)):
            m = np.mod(np.asarray(m, dtype=np.int64), p)
            if m.size == 0:
                m = m.reshape(dt, ds)
            if m.shape != (dt, ds):
                raise ValueError(f"map matrix at vertex {source.algebra.vertices[i]} has shape {m.shape}, "
                                 f"expected {(dt, ds)}")
            self.mats.append(m)
        if len(self.mats) != len(source.dims):
            raise ValueError("one matrix per vertex expected")
        self.summands = None if summands is None else tuple(summands)
        self.summand_modules = None if summand_modules is None else list(summand_modules)
        if check and not self.commutes():
            raise ValueError("matrices do not commute with the arrow maps")

    @classmethod
    def identity(cls, M):
        return cls(M, M, [np.eye(d, dtype=np.int64) for d in M.dims], check=False)

    @classmethod
    def zero(cls, M, N):
        return cls(M, N, [np.zeros((n, m), dtype=np.int64) for n, m in zip(N.dims, M.dims)], check=False)

    @classmethod
    def from_vector(cls, M, N, vector, offsets):
        return cls(M, N, M.unflatten(N, vector, offsets), check=False)

    @property
    def p(self):
        return self.source.p

    def commutes(self):
        A = self.source.algebra
        for a in A.arrows:
            s, t = A.vertex_index(a.source), A.vertex_index(a.target)
            left = self.target.maps[a.name] @ self.mats[s]
            right = self.mats[t] @ self.source.maps[a.name]
            if ((left - right) % self.p).any():
                return False
        return True

    def flat(self):
        """Concatenated row-major matrices, the coordinates used by ``Representation.hom_vectors``."""
        if not self.mats:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.reshape(-1) for m in self.mats])

    def __matmul__(self, other):
        """``g @ f`` is the composite "first f, then g"."""
        if other.target.dims != self.source.dims:
            raise ValueError("maps are not composable")
        return ModuleMap(other.source, self.target,
                         [(g @ f) % self.p for g, f in zip(self.mats, other.mats)], check=False)

    def __add__(self, other):
        return ModuleMap(self.source, self.target, [(f + g) % self.p for f, g in zip(self.mats, other.mats)],
                         check=False)

    def scale(self, c):
        return ModuleMap(self.source, self.target, [(c * f) % self.p for f in self.mats], check=False)

    def __repr__(self):
        return f"ModuleMap({self.source.dims} -> {self.target.dims})"

    def rank_vector(self):
        return tuple(rank(m, self.p) for m in self.mats)

    def is_zero(self):
        return not any(m.any() for m in self.mats)

    def is_epi(self):
        return self.rank_vector() == self.target.dims

    def is_mono(self):
        return self.rank_vector() == self.source.dims

    def is_iso(self):
        return self.source.dims == self.target.dims and self.is_epi()


def stack_maps(maps, M=None):
    """The map ``M -> N_1 + ... + N_k`` whose components are `maps` (all with source `M`)."""
    if not maps:
        target = direct_sum(algebra=M.algebra)
        return ModuleMap.zero(M, target)
    M = maps[0].source
    target = direct_sum(*[f.target for f in maps])
    mats = [np.vstack([f.mats[i] for f in maps]) for i in range(len(M.dims))]
    return ModuleMap(M, target, mats, check=False)


def codiagonal(maps, N=None):
    """The map ``M_1 + ... + M_k -> N`` whose restrictions to the summands are `maps` (all with target `N`)."""
    if not maps:
        source = direct_sum(algebra=N.algebra)
        return ModuleMap.zero(source, N)
    N = maps[0].target
    source = direct_sum(*[f.source for f in maps])
    mats = [np.hstack([f.mats[i] for f in maps]) for i in range(len(N.dims))]
    return ModuleMap(source, N, mats, check=False)


def kernel_of(f):
    """The inclusion ``Ker f -> source`` with the kernel in echelon coordinates."""
    bases = [kernel_basis(m, f.p) for m in f.mats]
    S = Submodule(f.source, bases, check=False)
    K, inclusion = submodule_representation(S)
    return ModuleMap(K, f.source, inclusion, check=False)


def image_submodule(f):
    return Submodule(f.target, [row_space(m.T, f.p) for m in f.mats], check=False)


def image_of(f):
    """The inclusion ``Im f -> target``."""
    I, inclusion = submodule_representation(image_submodule(f))
    return ModuleMap(I, f.target, inclusion, check=False)


def cokernel_of(f):
    """The projection ``target -> Cok f``."""
    S = image_submodule(f)
    Q = quotient(f.target, S)
    return ModuleMap(f.target, Q, [proj for proj, _ in projection_matrices(S)], check=False)


def restrict_to_summands(f, keep, side="right"):
    """
    Restrict an approximation to some of its summands.

    For ``side='right'`` the source of `f` is a direct sum described by ``f.summands`` and the columns of the
    kept summands are retained; for ``side='left'`` the same happens to the rows of the target.
    """
    modules = f.summand_modules
    keep = list(keep)
    if side == "right":
        blocks = _blocks(modules)
        source = direct_sum(*[modules[k] for k in keep], algebra=f.source.algebra)
        mats = [np.hstack([m[:, blocks[k][i]:blocks[k + 1][i]] for k in keep]) if keep
                else np.zeros((m.shape[0], 0), dtype=np.int64) for i, m in enumerate(f.mats)]
        g = ModuleMap(source, f.target, mats, check=False, summands=[f.summands[k] for k in keep],
                      summand_modules=[modules[k] for k in keep])
    else:
        blocks = _blocks(modules)
        target = direct_sum(*[modules[k] for k in keep], algebra=f.source.algebra)
        mats = [np.vstack([m[blocks[k][i]:blocks[k + 1][i], :] for k in keep]) if keep
                else np.zeros((0, m.shape[1]), dtype=np.int64) for i, m in enumerate(f.mats)]
        g = ModuleMap(f.source, target, mats, check=False, summands=[f.summands[k] for k in keep],
                      summand_modules=[modules[k] for k in keep])
    return g


def _blocks(modules):
    starts = [np.zeros(len(modules[0].dims), dtype=int) if modules else np.zeros(0, dtype=int)]
    for M in modules:
        starts.append(starts[-1] + np.asarray(M.dims))
    return starts
