"""
The 'subcat' package works with additive subcategories of a catalogued module category.

Main Features:
    - Bitmask subcategories with verdicts and closure reports (Subcat, Verdict, ClosureReport).
    - Exact-sequence censuses over direct sums of catalog modules (ext_census, sub_census, ses_census).
    - Fac, Sub, extension and filtration closures (fac_or_sub_closure, ext_closure, filt_membership).
    - n-fold torsion and torsion-free closures and their enumeration (torsion_closure, enumerate_nfold).
    - n-cokernels and n-kernels of add U (cok_or_ker_n).
    - Closure predicates (is_torsion_class, is_cne_closed, is_serre_in, is_ice_closed).
    - Orthogonal chains and n-fold torsion pairs (perp_chain, nfold_torsion_pair).
    - Kernel and cokernel closures computed three ways, KE and CE closures (kernel_closure_suite,
      cokernel_closure_suite, ke_ce_closure).
    - Ext-projectives, Ext-progenerators and subcategory approximations (ext_projectives, ext_progenerator,
      subcat_approximation).
"""
from .subcat import Subcat
from .subcat import Verdict
from .subcat import ClosureReport
from .subcat import mask_of
from .subcat import check_catalog_size
from .census import Census
from .census import ext_census
from .census import sub_census
from .census import ses_census
from .fac_or_sub_closure import fac_or_sub_closure
from .ext_closure import ext_closure
from .filt_membership import filt_membership
from .torsion_closure import torsion_closure
from .subcat_approximation import subcat_approximation
from .cok_or_ker_n import cok_or_ker_n
from .is_torsion_class import is_torsion_class
from .is_cne_closed import is_cne_closed
from .is_serre_in import is_serre_in
from .is_serre_in import is_ice_closed
from .perp_chain import PerpChain
from .perp_chain import perp_chain
from .perp_chain import nfold_torsion_pair
from .perp_chain import left_perp
from .perp_chain import right_perp
from .kernel_closure_suite import SuiteReport
from .kernel_closure_suite import kernel_closure_suite
from .kernel_closure_suite import cokernel_closure_suite
from .ke_ce_closure import ke_ce_closure
from .ext_projectives import ext_projectives
from .ext_projectives import ext_progenerator
from .enumerate_nfold import enumerate_nfold
