import logging

from nfoldlib.errors import UnsupportedAlgebraError
from .string_word import StringWord

logger = logging.getLogger(__name__)


def enumerate_strings(A):
    """
    All strings of a string algebra up to inversion, including the trivial ones.

    Words are grown letter by letter on the right. A letter is refused if it cancels the previous one, if it
    is not composable with it, or if the maximal run of letters of one orientation then contains a relation.

    Parameters
    ----------
    A : BoundQuiverAlgebra
        A string algebra (see ``quiverlang.validate_string_algebra``).

    Returns
    -------
    list of StringWord
        Canonical representatives (the smaller of a word and its inverse), trivial strings first in vertex
        order, then by length and letters.

    Raises
    ------
    UnsupportedAlgebraError
        "band detected: representation-infinite" when strings longer than any string of a
        representation-finite algebra of this size exist.
    """
    bound = 2 * len(A.arrows) * max(1, A.max_path_length)
    found = {}
    level = [StringWord(v) for v in A.vertices]
    for w in level:
        found[w] = None
    length = 0
    while level:
        length += 1
        if length > bound:
            raise UnsupportedAlgebraError("band detected: representation-infinite")
        nxt = []
        for w in level:
            end = w.positions(A)[-1]
            for arrow in A.arrows:
                for sign in (1, -1):
                    if (arrow.source if sign > 0 else arrow.target) != end:
                        continue
                    letter = (arrow.name, sign)
                    if _admissible(A, w, letter):
                        nxt.append(StringWord(w.start, w.letters + (letter,)))
        for w in nxt:
            found.setdefault(w.canonical(A), None)
        level = nxt
    strings = sorted(found, key=lambda w: (w.length, A.vertex_index(w.start) if w.is_trivial else 0, w.key()))
    logger.debug("%d strings", len(strings))
    return strings


def _admissible(A, w, letter):
    name, sign = letter
    if w.letters:
        last_name, last_sign = w.letters[-1]
        if last_name == name and last_sign == -sign:
            return False
    run = [letter]
    for prev in reversed(w.letters):
        if prev[1] != sign:
            break
        run.append(prev)
    run.reverse()
    names = tuple(n for n, _ in run)
    path = names if sign > 0 else tuple(reversed(names))
    return not A.contains_relation(path)
