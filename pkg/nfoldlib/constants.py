"""
Default bounds and settings for `nfoldlib` computations.

Constants:
    - DEFAULT_PRIME = 2 : Field modulus used when an algebra file has no ``field`` line.
    - PATH_LENGTH_BOUND = 64 : Longest nonzero path accepted before the ideal is declared non-admissible.
    - SUBMODULE_DIM_BOUND = 12 : Largest total dimension whose submodule lattice is enumerated.
    - SUBSPACE_GUARD = 65536 : Largest number of subspaces enumerated at a single vertex.
    - ISO_ENUM_GUARD = 2**20 : Largest Hom space (in elements) searched exhaustively for an isomorphism.
    - ISO_SAMPLE_BUDGET = 400 : Random Hom elements tried before the exhaustive isomorphism search.
    - EXT_DIM_GUARD = 12 : Largest Ext^1 dimension whose classes are enumerated one by one.
    - HOM_ENUM_GUARD = 4096 : Largest Hom space (in elements) enumerated by bounded presentation searches.
    - MU = 2 : Multiplicity bound, the number of indecomposable summands of an assembled object.
    - SUBSET_GUARD = 2**22 : Largest number of subset tests in one n-fold enumeration.
    - MAX_CATALOG = 63 : Largest catalog encodable in the uint64 bitmasks of the censuses.
    - SEED = 0 : Seed of the randomized isomorphism search.
    - SCHEMA = "taufold.v1" : Version tag of the JSON output.
    - THREADS_ENV = "TAUFOLD_THREADS" : Environment variable holding the worker count of the CLI.
"""

DEFAULT_PRIME = 2  # smallest exact field
PATH_LENGTH_BOUND = 64  # admissibility detection
SUBMODULE_DIM_BOUND = 12  # submodule lattice enumeration
SUBSPACE_GUARD = 65536  # subspaces per vertex
ISO_ENUM_GUARD = 2 ** 20  # exhaustive isomorphism search
ISO_SAMPLE_BUDGET = 400  # randomized isomorphism search
EXT_DIM_GUARD = 12  # enumeration of extension classes
HOM_ENUM_GUARD = 4096  # enumeration of Hom elements
MU = 2  # summands per assembled object
SUBSET_GUARD = 2 ** 22  # subset tests per enumeration
MAX_CATALOG = 63  # bits available in a census mask
SEED = 0  # randomized isomorphism search
SCHEMA = "taufold.v1"  # JSON output tag
THREADS_ENV = "TAUFOLD_THREADS"  # worker count of the CLI
