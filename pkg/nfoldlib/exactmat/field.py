import numpy as np
import sympy

from nfoldlib.errors import GuardExceededError


class PrimeField:
    r"""
    The prime field :math:`\mathbb{F}_p`.

    Field elements are ``numpy.int64`` entries in ``[0, p)``; matrices are 2-D arrays of such entries.

    Parameters
    ----------
    p : int
        The modulus. Must be prime and below :math:`2^{31}` so that products of two entries fit in int64.

    Raises
    ------
    ValueError
        If `p` is not a prime.
    """

    def __init__(self, p):
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise ValueError(f"field modulus must be an integer, got {p!r}")
        p = int(p)
        if not sympy.isprime(p):
            raise ValueError(f"field modulus {p} is not prime")
        if p >= 2 ** 31:
            raise GuardExceededError(f"field modulus {p} exceeds 2^31")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def reduce(self, a):
        """Return `a` as an int64 array reduced into ``[0, p)``."""
        return np.mod(np.asarray(a, dtype=np.int64), self.p)

    def matrix(self, data, rows=None, cols=None):
        """Build a reduced 2-D matrix; empty input needs explicit `rows` and `cols`."""
        m = self.reduce(data)
        if rows is not None and cols is not None:
            m = m.reshape(rows, cols)
        if m.ndim != 2:
            raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
        return m

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def inv(self, x):
        """Multiplicative inverse of a nonzero scalar."""
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, self.p - 2, self.p)
