"""Points and localising subcategories of toposes of M-sets, for finite monoids M."""
from .errors import *  # noqa: F401,F403
from .monoid import (
    FiniteMonoid,
    ElementSubset,
    MonoidHomomorphism,
    validate_monoid,
    from_transformations,
    full_transformation_monoid,
    opposite,
    idempotents,
    green_partition,
    principal_ideal,
    two_sided_ideals,
    congruence_closure,
    quotient_monoid,
    semilattice_quotient,
    commutative_quotient,
    spec_prime_ideals,
    monoid_isomorphic,
)
from .msets import (
    MSet,
    validate_action,
    regular_mset,
    principal_left_mset,
    equivariant_maps,
    mset_hom_set,
    mset_isomorphic,
    tensor,
    tensor_along_hom,
)
from .points import (
    is_filtered,
    is_F_monoid,
    right_zero,
    saturation,
    quotient_by_F_submonoid,
    classify_points,
    category_I,
    endomorphism_monoid_of_point,
    induced_point_map,
)
from .topologies import (
    right_ideals,
    is_grothendieck_topology,
    topology_from_ideal,
    ideal_of_topology,
    idempotent_ideal_lattice,
    idem_j_poset,
    order_topology_opens,
    is_sheaf,
    point_transversality,
)
from .oracle import build_corpus, enumerate_monoids, enumerate_topologies, enumerate_filtered_cyclic
from .suite import run_theorem_suite
from .report import analyze
from .fixtures import fixture

__version__ = "0.1.0"
