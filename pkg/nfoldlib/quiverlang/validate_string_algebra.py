from dataclasses import dataclass, field

from nfoldlib.errors import UnsupportedAlgebraError


@dataclass(frozen=True)
class StringAlgebraCertificate:
    """Witness that a bound quiver algebra is a string algebra."""
    out_degree: dict = field(default_factory=dict)
    in_degree: dict = field(default_factory=dict)
    successor: dict = field(default_factory=dict)
    predecessor: dict = field(default_factory=dict)


def validate_string_algebra(A):
    """
    Check that `A` is a monomial special biserial (string) algebra.

    Parameters
    ----------
    A : BoundQuiverAlgebra
        The algebra to check.

    Returns
    -------
    StringAlgebraCertificate
        Per-vertex in/out degrees and, per arrow, its unique nonzero successor and predecessor (or None).

    Raises
    ------
    UnsupportedAlgebraError
        Naming the violated condition.
    """
    out_degree = {v: len(A.quiver.out_arrows(v)) for v in A.vertices}
    in_degree = {v: len(A.quiver.in_arrows(v)) for v in A.vertices}
    for v in A.vertices:
        if out_degree[v] > 2:
            raise UnsupportedAlgebraError(
                f"unsupported algebra class: {out_degree[v]} arrows start at vertex {v} (at most 2 allowed)")
        if in_degree[v] > 2:
            raise UnsupportedAlgebraError(
                f"unsupported algebra class: {in_degree[v]} arrows end at vertex {v} (at most 2 allowed)")

    zero = {rel for rel in A.relations if len(rel) == 2}
    successor = {}
    predecessor = {}
    for a in A.arrows:
        after = [b.name for b in A.quiver.out_arrows(a.target) if (a.name, b.name) not in zero]
        before = [c.name for c in A.quiver.in_arrows(a.source) if (c.name, a.name) not in zero]
        if len(after) > 1:
            raise UnsupportedAlgebraError(
                f"unsupported algebra class: arrow {a.name} has nonzero successors {', '.join(after)}")
        if len(before) > 1:
            raise UnsupportedAlgebraError(
                f"unsupported algebra class: arrow {a.name} has nonzero predecessors {', '.join(before)}")
        successor[a.name] = after[0] if after else None
        predecessor[a.name] = before[0] if before else None
    return StringAlgebraCertificate(out_degree, in_degree, successor, predecessor)
