from dataclasses import dataclass


@dataclass(frozen=True)
class StringWord:
    """
    A string: a walk in the quiver through arrows (sign +1) and formal inverses (sign -1).

    `letters` are ``(arrow name, sign)`` pairs read from `start`; the empty word is the trivial string at
    `start`. A direct letter ``(a, 1)`` walks from the source of ``a`` to its target, an inverse letter the
    other way.
    """
    start: str
    letters: tuple = ()

    @property
    def length(self):
        return len(self.letters)

    @property
    def is_trivial(self):
        return not self.letters

    def positions(self, A):
        """The vertices visited, one per basis vector of the string module."""
        visited = [self.start]
        for name, sign in self.letters:
            arrow = A.quiver.arrow(name)
            visited.append(arrow.target if sign > 0 else arrow.source)
        return visited

    def inverse(self, A):
        end = self.positions(A)[-1]
        return StringWord(end, tuple((name, -sign) for name, sign in reversed(self.letters)))

    def key(self):
        """Sort key; direct letters before inverse letters of the same arrow."""
        return tuple((name, 0 if sign > 0 else 1) for name, sign in self.letters)

    def canonical(self, A):
        """The smaller of the word and its inverse."""
        if self.is_trivial:
            return self
        other = self.inverse(A)
        return min(self, other, key=lambda w: w.key())

    def __str__(self):
        if self.is_trivial:
            return f"e{self.start}"
        return " ".join(name if sign > 0 else f"{name}^-1" for name, sign in self.letters)
