"""Exact computations with compact-open bisections of boundary path groupoids
of finite directed graphs: Cuntz–Krieger families, relation morphisms and
their composition as groupoid actors."""

from .actors import (
    CompositionError,
    InverseReport,
    Theta,
    compose_families,
    identity_family,
    map_bisection,
    map_cylinder,
    search_inverse,
    theta_path,
    verify_inverse,
)
from .families import (
    DCKFamily,
    VerificationReport,
    check_edge_compat,
    check_vertex_compat,
    is_nondegenerate,
    verify_family,
)
from .graph import (
    DirectedGraph,
    Edge,
    GraphError,
    Path,
    path_comparable,
    path_concat,
    path_prefix,
    validate_graph,
)
from .relations import (
    AdmissibilityError,
    AdmissibilityReport,
    PreconditionError,
    RelationMorphism,
    check_admissible,
    family_to_relation,
    relation_to_family,
    validate_relation,
)
from .shift import (
    Bisection,
    CylinderSet,
    GraphMismatch,
    NotABisection,
    basic,
    bis_canonicalize,
    bis_inverse,
    bis_product,
    bis_range,
    bis_source,
    bis_union,
    bisection,
    cyl_canonicalize,
    cyl_difference,
    cyl_equals,
    cyl_intersection,
    cyl_is_empty,
    cyl_subset,
    cyl_union,
    cylinder,
    embed_identity,
    full_unit_space,
)

__version__ = "0.1.0"
