import logging
from dataclasses import dataclass

from nfoldlib import constants
from nfoldlib.errors import UnsupportedAlgebraError
from nfoldlib.exactmat import PrimeField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path of the quiver: `arrows` traversed in order from `source` to `target`."""
    source: str
    target: str
    arrows: tuple = ()

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def __str__(self):
        if self.is_trivial:
            return f"e{self.source}"
        return "*".join(self.arrows)


class Quiver:
    """
    A finite quiver with ordered vertices and named arrows.

    Parameters
    ----------
    vertices : sequence of str
        Vertex ids in canonical order.
    arrows : sequence of Arrow
        Arrows; names unique, endpoints declared.

    Raises
    ------
    ValueError
        On duplicate vertices or arrow names, or undeclared endpoints.
    """

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"duplicate vertex ids in {self.vertices}")
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._arrow_by_name = {}
        for a in self.arrows:
            if a.name in self._arrow_by_name:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            for end in (a.source, a.target):
                if end not in self._vertex_index:
                    raise ValueError(f"arrow {a.name!r} uses unknown vertex {end!r}")
            self._arrow_by_name[a.name] = a

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def vertex_index(self, v):
        try:
            return self._vertex_index[str(v)]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def arrow(self, name):
        try:
            return self._arrow_by_name[name]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name):
        return name in self._arrow_by_name

    def out_arrows(self, v):
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a.target == v]


class BoundQuiverAlgebra:
    r"""
    A bound quiver algebra :math:`\mathbb{F}_p Q / I` with a monomial ideal `I`.

    The residue paths (paths containing no relation as a subpath) form the `path_basis`, ordered by
    length, then by source vertex for trivial paths and lexicographically on arrow names otherwise.

    Parameters
    ----------
    quiver : Quiver
        The underlying quiver.
    relations : sequence of sequence of str
        Monomial relations; each a composable path of length at least 2. ``("a", "b")`` means "first a,
        then b".
    p : int, optional
        Field modulus, by default ``constants.DEFAULT_PRIME``.
    length_bound : int, optional
        Longest nonzero path accepted, by default ``constants.PATH_LENGTH_BOUND``.

    Raises
    ------
    ValueError
        For unknown arrows, non-composable or too short relations.
    UnsupportedAlgebraError
        When nonzero paths longer than `length_bound` exist (the ideal is not admissible).
    """

    def __init__(self, quiver, relations=(), p=constants.DEFAULT_PRIME, length_bound=constants.PATH_LENGTH_BOUND):
        self.quiver = quiver
        self.field = PrimeField(p)
        rels = []
        for rel in relations:
            rel = tuple(rel)
            if len(rel) < 2:
                raise ValueError(f"relation {'*'.join(rel)!r} has length below 2")
            for name in rel:
                quiver.arrow(name)
            for first, second in zip(rel, rel[1:]):
                if quiver.arrow(first).target != quiver.arrow(second).source:
                    raise ValueError(f"relation {'*'.join(rel)!r} is not composable at {first}*{second}")
            rels.append(rel)
        self.relations = tuple(rels)
        self.path_basis = self._compute_path_basis(length_bound)
        logger.debug("algebra with %d vertices, %d arrows, dim %d", len(quiver.vertices), len(quiver.arrows),
                     len(self.path_basis))

    @property
    def p(self):
        return self.field.p

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @property
    def dim(self):
        return len(self.path_basis)

    @property
    def max_path_length(self):
        return max((q.length for q in self.path_basis), default=0)

    def __eq__(self, other):
        return (isinstance(other, BoundQuiverAlgebra) and self.quiver == other.quiver
                and set(self.relations) == set(other.relations) and self.p == other.p)

    def __hash__(self):
        return hash((self.quiver, frozenset(self.relations), self.p))

    def __repr__(self):
        return (f"BoundQuiverAlgebra(vertices={list(self.vertices)}, arrows={len(self.arrows)}, "
                f"relations={len(self.relations)}, p={self.p}, dim={self.dim})")

    def vertex_index(self, v):
        return self.quiver.vertex_index(v)

    def contains_relation(self, names):
        """True if the arrow sequence `names` has some relation as a contiguous subpath."""
        names = tuple(names)
        for rel in self.relations:
            k = len(rel)
            for i in range(len(names) - k + 1):
                if names[i:i + k] == rel:
                    return True
        return False

    def extend(self, path, arrow_name):
        """Return ``path * arrow`` as a Path if it is a nonzero residue path, else None."""
        a = self.quiver.arrow(arrow_name)
        if a.source != path.target:
            return None
        names = path.arrows + (arrow_name,)
        for rel in self.relations:
            if names[-len(rel):] == rel:
                return None
        return Path(path.source, a.target, names)

    def paths_from(self, v, target=None):
        """Basis paths starting at `v` (ending at `target` if given), in basis order."""
        return [q for q in self.path_basis if q.source == v and (target is None or q.target == target)]

    def paths_to(self, v, source=None):
        """Basis paths ending at `v` (starting at `source` if given), in basis order."""
        return [q for q in self.path_basis if q.target == v and (source is None or q.source == source)]

    def _compute_path_basis(self, length_bound):
        level = [Path(v, v, ()) for v in self.quiver.vertices]
        basis = list(level)
        names = sorted(a.name for a in self.quiver.arrows)
        length = 0
        while level:
            length += 1
            if length > length_bound:
                raise UnsupportedAlgebraError(
                    f"non-admissible ideal: nonzero paths longer than the bound {length_bound}")
            nxt = []
            for q in level:
                for name in names:
                    ext = self.extend(q, name)
                    if ext is not None:
                        nxt.append(ext)
            nxt.sort(key=lambda q: q.arrows)
            basis.extend(nxt)
            level = nxt
        return tuple(basis)
