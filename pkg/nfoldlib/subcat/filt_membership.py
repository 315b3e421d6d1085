from nfoldlib import constants
from nfoldlib.repcore import decompose, quotient, submodule_lattice, submodule_representation


def filt_membership(M, C, dim_bound=constants.SUBMODULE_DIM_BOUND):
    """
    Decide whether `M` has a finite filtration with subquotients in add(`C`).

    `M` qualifies when it is zero, lies in add(`C`), or has a nonzero submodule in add(`C`) whose quotient
    qualifies. The search walks submodule lattices and is exact.

    Parameters
    ----------
    M : Representation
    C : Subcat
    dim_bound : int, optional
        Submodule lattice bound, by default ``constants.SUBMODULE_DIM_BOUND``.

    Returns
    -------
    bool

    Raises
    ------
    GuardExceededError
        If `M` is too large for the lattice enumeration.
    """
    cat = C.cat
    seen = {}

    def member(X):
        return all(i in C for i in decompose(X, cat, verify=False))

    def filtered(X):
        if X.total_dim == 0:
            return True
        key = X.key()
        if key in seen:
            return seen[key]
        seen[key] = False
        result = member(X)
        if not result:
            for S in submodule_lattice(X, dim_bound):
                if S.is_zero() or S.is_whole():
                    continue
                if member(submodule_representation(S)[0]) and filtered(quotient(X, S)):
                    result = True
                    break
        seen[key] = result
        return result

    return filtered(M)
