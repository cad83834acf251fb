"""
plink
=====

Exact verification workbench for Z2-linking in simplicial n-complexes:
named complexes and their sphere patterns, generic linear embeddings
with rational coordinates, Z2 linking numbers by projection crossings
and by cone intersection, van Kampen-Flores double-point parities, and
Delta-Y(n) exchanges with sphere transport and family search.
"""

from .canonical import CanonicalForm, canonicalize, is_isomorphic
from .complex import (
    SimplicialComplex,
    boundary_sphere,
    closure,
    degree,
    delta_k,
    find_octahedra,
    find_tetrahedra,
    is_trivalent,
    join,
    simplex,
    skeleton,
)
from .constructions import (
    build_H,
    build_K,
    complete_graph,
    fold_join,
    gamma_xi_tetrahedra,
    kneser_graph,
    petersen_graph,
    sigma_skeleton,
    xi_set,
)
from .deltay import (
    apply_delta_y,
    build_P,
    family_search,
    hdpet_certificate,
    transport_family,
    transport_sphere,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    Embedding,
    lk2_cone,
    lk2_projection,
    moment_embedding,
    project,
    randomized_embedding,
    simplex_crossings,
    validate_general_position,
    vkf_crossings,
    vkf_parity,
)
from .linking import (
    PairFamily,
    SpherePair,
    SphereSubcomplex,
    exists_linked,
    is_z2_sphere,
    lambda_cycles,
    lambda_pattern,
    parity_sum,
    verify_theorem,
)

__version__ = "0.1.0"
