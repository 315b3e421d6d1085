"""
The 'taufold' package relates tau-rigid modules to torsion and two-fold torsion classes.

Main Features:
    - Basic tau-rigid, rigid and support tau-tilting modules (TauRigidModule, enumerate_tau_rigid,
      enumerate_rigid, support_tau_tilting).
    - The lattice of torsion classes with its Hasse diagram (torsion_lattice, TorsionLattice).
    - Ext-progenerators of torsion classes and of cok_1 U (ext_progenerator_ftors, progenerator_of_cok1).
    - The inverse map to cok_1, the approximation condition and co-Bongartz completion (phi, check_star,
      co_bongartz).
    - Two-fold torsion pairs and cok_1 U-approximations (two_fold_torsion_pair, cok_approximations).
    - Bijection checks and the pairing table (verify_bijection, BijectionReport, pairing_table).
"""
from .tau_rigid_module import TauRigidModule
from .enumerate_tau_rigid import enumerate_tau_rigid
from .enumerate_tau_rigid import enumerate_rigid
from .co_bongartz import co_bongartz
from .support_tau_tilting import support_tau_tilting
from .torsion_lattice import TorsionLattice
from .torsion_lattice import torsion_lattice
from .ext_progenerator_ftors import ext_progenerator_ftors
from .phi import phi
from .check_star import check_star
from .two_fold_torsion_pair import TwoFoldTorsionPair
from .two_fold_torsion_pair import two_fold_torsion_pair
from .progenerator_of_cok1 import progenerator_of_cok1
from .cok_approximations import cok_approximations
from .cok_approximations import ApproximationReport
from .verify_bijection import BijectionReport
from .verify_bijection import verify_bijection
from .pairing_table import PairingTable
from .pairing_table import pairing_table
