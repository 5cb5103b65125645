"""Simplicial complexes through their minimal non-faces.

Invariants (``alpha``, the nerve, lcm-lattice homology and its duality for
homology spheres), the standard constructions, and an isomorph-free census
of unsuspended homology spheres with few minimal non-faces.
"""

from .canonical import are_isomorphic, canonical_form, canonical_key
from .census import (
    CensusConfig,
    CensusRecord,
    census_codim2,
    census_codim3,
    enumerate_census,
    resume,
)
from .complex import (
    MnfComplex,
    alpha,
    dimension,
    f_vector,
    facets,
    is_face,
    is_pure,
    new_complex,
)
from .constructions import (
    codim3_sphere,
    cross_minus_facet,
    cross_polytope,
    cyclic_boundary,
    induced,
    join,
    link,
    one_point_suspension,
    pd_sphere,
    pentagon,
    simplex_boundary,
    two_point_suspension,
)
from .homology import GF2, QQ, FieldSpec, boundary_rank, is_cone, is_homology_sphere, reduced_betti
from .lcm import BettiTable, LcmLattice, betti_table, build_lattice, check_duality, h, interval_order_complex
from .nerve import (
    NerveComplex,
    detect_pd_pattern,
    facet_sets,
    is_point_separating,
    join_decompose,
    nerve,
    nerve_matching_number,
    nerve_max_degree,
    replay,
    transpose_reconstruct,
    unsuspend,
)

__version__ = "0.1.0"
