import logging
import re
from importlib import resources
from pathlib import Path as FilePath

from nfoldlib import constants
from nfoldlib.errors import AlgebraParseError, GuardExceededError, UnsupportedAlgebraError
from .quiver import Arrow, Quiver, BoundQuiverAlgebra

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z0-9_]+$")


def parse_algebra(text, length_bound=constants.PATH_LENGTH_BOUND):
    r"""
    Parse an algebra description into a :class:`BoundQuiverAlgebra`.

    The description is line oriented; ``#`` starts a comment. Accepted lines::

        field <prime>
        vertex <id>
        arrow <name> : <src> -> <tgt>
        relation <name>*<name>[*<name>...]

    Parameters
    ----------
    text : str
        The description.
    length_bound : int, optional
        Admissibility bound handed to the algebra, by default ``constants.PATH_LENGTH_BOUND``.

    Returns
    -------
    BoundQuiverAlgebra
        The algebra with its path basis computed.

    Raises
    ------
    AlgebraParseError
        On syntax errors, unknown vertices or arrows and non-composable relations; the message starts with
        the line (and column) of the offending token.
    UnsupportedAlgebraError
        If the ideal is not admissible within `length_bound`.

    Examples
    --------
    >>> A = parse_algebra("vertex 1\\nvertex 2\\narrow b : 2 -> 1\\n")
    >>> A.dim
    3
    """
    p = None
    vertices = []
    arrows = []
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword, kcol = tokens[0]
        args = tokens[1:]
        if keyword == "field":
            if len(args) != 1:
                raise AlgebraParseError("expected 'field <prime>'", lineno, kcol)
            if p is not None:
                raise AlgebraParseError("field declared twice", lineno, kcol)
            value, col = args[0]
            if not value.isdigit():
                raise AlgebraParseError(f"field modulus {value!r} is not an integer", lineno, col)
            p = int(value)
        elif keyword == "vertex":
            if len(args) != 1:
                raise AlgebraParseError("expected 'vertex <id>'", lineno, kcol)
            value, col = args[0]
            if not _NAME.match(value):
                raise AlgebraParseError(f"invalid vertex id {value!r}", lineno, col)
            if value in vertices:
                raise AlgebraParseError(f"duplicate vertex {value!r}", lineno, col)
            vertices.append(value)
        elif keyword == "arrow":
            arrows.append(_parse_arrow(args, vertices, arrows, lineno, kcol))
        elif keyword == "relation":
            relations.append(_parse_relation(args, arrows, lineno, kcol))
        else:
            raise AlgebraParseError(f"unknown keyword {keyword!r}", lineno, kcol)
    if not vertices:
        raise AlgebraParseError("no vertex declared")
    try:
        quiver = Quiver(vertices, arrows)
        algebra = BoundQuiverAlgebra(quiver, relations, constants.DEFAULT_PRIME if p is None else p, length_bound)
    except (UnsupportedAlgebraError, GuardExceededError):
        raise
    except ValueError as err:
        raise AlgebraParseError(str(err)) from err
    logger.info("parsed algebra: %d vertices, %d arrows, %d relations, dim %d over F_%d", len(vertices),
                len(arrows), len(relations), algebra.dim, algebra.p)
    return algebra


def _parse_arrow(args, vertices, arrows, lineno, kcol):
    shape = [tok for tok, _ in args]
    if len(shape) != 5 or shape[1] != ":" or shape[3] != "->":
        raise AlgebraParseError("expected 'arrow <name> : <src> -> <tgt>'", lineno, kcol)
    (name, ncol), _, (src, scol), _, (tgt, tcol) = args
    if not _NAME.match(name):
        raise AlgebraParseError(f"invalid arrow name {name!r}", lineno, ncol)
    if any(a.name == name for a in arrows):
        raise AlgebraParseError(f"duplicate arrow {name!r}", lineno, ncol)
    for v, col in ((src, scol), (tgt, tcol)):
        if v not in vertices:
            raise AlgebraParseError(f"unknown vertex {v!r}", lineno, col)
    return Arrow(name, src, tgt)


def _parse_relation(args, arrows, lineno, kcol):
    if len(args) != 1:
        raise AlgebraParseError("expected 'relation <name>*<name>...'", lineno, kcol)
    body, col = args[0]
    names = body.split("*")
    by_name = {a.name: a for a in arrows}
    offset = col
    for name in names:
        if name not in by_name:
            raise AlgebraParseError(f"unknown arrow {name!r} in relation", lineno, offset)
        offset += len(name) + 1
    if len(names) < 2:
        raise AlgebraParseError(f"relation {body!r} has length below 2", lineno, col)
    for first, second in zip(names, names[1:]):
        if by_name[first].target != by_name[second].source:
            raise AlgebraParseError(f"relation {body!r} is not composable at {first}*{second}", lineno, col)
    return tuple(names)


def format_algebra(A):
    """Serialize `A` in the description format read by :func:`parse_algebra`."""
    lines = [f"field {A.p}"]
    lines += [f"vertex {v}" for v in A.vertices]
    lines += [f"arrow {a.name} : {a.source} -> {a.target}" for a in A.arrows]
    lines += ["relation " + "*".join(rel) for rel in A.relations]
    return "\n".join(lines) + "\n"


def bundled_algebras():
    """Names of the algebra descriptions shipped with the package."""
    folder = resources.files("nfoldlib.algebras")
    return sorted(f.name[:-4] for f in folder.iterdir() if f.name.endswith(".alg"))


def load_algebra(name_or_path, length_bound=constants.PATH_LENGTH_BOUND):
    """
    Load a bundled algebra by name (``"ex73"``) or an algebra file by path.

    Raises
    ------
    FileNotFoundError
        If neither a bundled name nor a readable file matches.
    """
    name = str(name_or_path)
    if name in bundled_algebras():
        text = resources.files("nfoldlib.algebras").joinpath(name + ".alg").read_text(encoding="utf-8")
    else:
        path = FilePath(name)
        if not path.is_file():
            raise FileNotFoundError(f"no algebra file or bundled algebra named {name!r}")
        text = path.read_text(encoding="utf-8")
    return parse_algebra(text, length_bound=length_bound)
