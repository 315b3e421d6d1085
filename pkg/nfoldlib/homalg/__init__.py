"""
The 'homalg' package computes the homological data of modules: Hom, Ext, the translate and approximations.

Main Features:
    - Module homomorphisms with kernels, images and cokernels (ModuleMap, kernel_of, image_of, cokernel_of).
    - Hom spaces (hom_basis, HomSpace).
    - Minimal projective presentations and syzygies (min_proj_presentation, syzygy_module).
    - Ext dimensions and extension middle terms (ext_dim, extension_middle_terms).
    - Auslander-Reiten translate (tau).
    - Trace and reject (trace, reject).
    - Minimal left and right approximations (minimal_approximation, strip_summands, wakamatsu_check).
    - Resolution and global dimension (resolution_dimension, global_dim).
    - Rigidity tests (is_rigid, is_tau_rigid).
"""
from .module_map import ModuleMap
from .module_map import kernel_of
from .module_map import image_of
from .module_map import cokernel_of
from .module_map import stack_maps
from .module_map import codiagonal
from .hom_basis import hom_basis
from .hom_basis import HomSpace
from .min_proj_presentation import min_proj_presentation
from .min_proj_presentation import Presentation
from .min_proj_presentation import syzygy_module
from .ext_dim import ext_dim
from .ext_dim import extension_middle_terms
from .tau import tau
from .trace import trace
from .trace import reject
from .minimal_approximation import minimal_approximation
from .minimal_approximation import radical_basis
from .minimal_approximation import is_approximation
from .minimal_approximation import strip_summands
from .minimal_approximation import wakamatsu_check
from .resolution_dimension import resolution_dimension
from .resolution_dimension import global_dim
from .is_rigid import is_rigid
from .is_rigid import is_tau_rigid
