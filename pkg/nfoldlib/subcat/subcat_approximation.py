from nfoldlib.homalg import minimal_approximation
from nfoldlib.homalg.module_map import ModuleMap


def subcat_approximation(M, C, side="right"):
    """
    Minimal left or right add(`C`)-approximation of a module.

    Parameters
    ----------
    M : Representation
    C : Subcat
    side : {'left', 'right'}

    Returns
    -------
    ModuleMap
        Its ``summands`` are catalog indices.
    """
    members = C.indices
    f = minimal_approximation(side, M, C.modules)
    return ModuleMap(f.source, f.target, f.mats, check=False, summands=[members[k] for k in f.summands],
                     summand_modules=f.summand_modules)
