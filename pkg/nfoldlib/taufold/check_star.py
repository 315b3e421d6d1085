from nfoldlib.subcat import Verdict, ext_projectives, subcat_approximation, torsion_closure


def check_star(C):
    """
    Test whether `C` is closed under the approximations by the Ext-projectives of its torsion closure.

    For every indecomposable member ``M``, the right minimal add P(T1(C))-approximation ``P_M -> M`` must have
    ``P_M`` in `C`. Minimal approximations are additive, so indecomposable members suffice.

    Parameters
    ----------
    C : Subcat
        A two-fold torsion class.

    Returns
    -------
    Verdict
        On failure the witness is ``(M, P_M)`` as labels.

    Examples
    --------
    Over ``a : 3 -> 2``, ``b : 2 -> 1`` with relation ``a*b``, add(P2+S3) fails with witness ``('S3', 'P3')``.
    """
    cat = C.cat
    P = ext_projectives(torsion_closure(C, 1, "tors"))
    for i in C:
        f = subcat_approximation(cat.indecs[i], P, "right")
        if not all(j in C for j in f.summands):
            return Verdict(False, (cat.labels[i], "+".join(cat.labels[j] for j in f.summands)))
    return Verdict(True)
