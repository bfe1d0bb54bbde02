"""Crossed modules over finite permutation groups.

Core objects: permutation groups with verified homomorphisms, finite
presentations with coset enumeration, crossed modules with exhaustive
axiom checking, induction along subgroup inclusions, and the square
calculus (double groupoid) view of a crossed module.
"""

from .errors import (
    BudgetExceeded,
    CosetLimitExceeded,
    DegreeMismatch,
    EdgeMismatch,
    EnumerationBoundExceeded,
    IncompleteTable,
    MaterializationBoundExceeded,
    NonAbelian,
    NonInjective,
    NonNormal,
    NotASubgroup,
    NotInGroup,
    ParseError,
    RelationViolated,
    SearchBoundExceeded,
    TableMismatch,
    ValidationFailed,
    XmodlabError,
)
from .fp import (
    DEFAULT_MAX_COSETS,
    CosetTable,
    Presentation,
    Word,
    abelianization,
    parse_word,
    perm_rep,
    smith_normal_form,
    todd_coxeter,
)
from .induce import (
    Report,
    coset_transversal,
    free_crossed_module_presentation,
    induce,
    induced_presentation,
    match_catalogue,
    run_table,
    run_table_full,
    small_group_name,
    table_subgroup,
    verify_table,
)
from .perm import (
    Fingerprint,
    GroupHom,
    PermGroup,
    Permutation,
    abelian_invariants,
    center,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    fingerprint,
    gl23,
    hom,
    identity_hom,
    image,
    isomorphic,
    kernel,
    normal_closure,
    parse_generator_list,
    parse_permutation,
    quotient,
    right_coset_representatives,
    sl23,
    symmetric,
)
from .squares import (
    DoubleGroupoidView,
    Square,
    compose_h,
    compose_v,
    connection_minus,
    connection_plus,
    gamma,
    h_unit,
    interchange_exhaustive,
    interchange_sampled,
    inverse_h,
    inverse_v,
    square,
    v_unit,
)
from .xmod import (
    CrossedModule,
    ValidationReport,
    XModMorphism,
    identity_xmod,
    normal_inclusion_xmod,
    pi1,
    pi2,
    validate,
    xmod_from_json,
    xmod_isomorphic,
    xmod_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CosetLimitExceeded",
    "CosetTable",
    "CrossedModule",
    "DEFAULT_MAX_COSETS",
    "DegreeMismatch",
    "DoubleGroupoidView",
    "EdgeMismatch",
    "EnumerationBoundExceeded",
    "Fingerprint",
    "GroupHom",
    "IncompleteTable",
    "MaterializationBoundExceeded",
    "NonAbelian",
    "NonInjective",
    "NonNormal",
    "NotASubgroup",
    "NotInGroup",
    "ParseError",
    "PermGroup",
    "Permutation",
    "Presentation",
    "RelationViolated",
    "Report",
    "SearchBoundExceeded",
    "Square",
    "TableMismatch",
    "ValidationFailed",
    "ValidationReport",
    "Word",
    "XModMorphism",
    "XmodlabError",
    "abelian_invariants",
    "abelianization",
    "center",
    "compose_h",
    "compose_v",
    "connection_minus",
    "connection_plus",
    "coset_transversal",
    "cyclic",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "fingerprint",
    "free_crossed_module_presentation",
    "gamma",
    "gl23",
    "h_unit",
    "hom",
    "identity_hom",
    "identity_xmod",
    "image",
    "induce",
    "induced_presentation",
    "interchange_exhaustive",
    "interchange_sampled",
    "inverse_h",
    "inverse_v",
    "isomorphic",
    "kernel",
    "match_catalogue",
    "normal_closure",
    "normal_inclusion_xmod",
    "parse_generator_list",
    "parse_permutation",
    "parse_word",
    "perm_rep",
    "pi1",
    "pi2",
    "quotient",
    "right_coset_representatives",
    "run_table",
    "run_table_full",
    "sl23",
    "small_group_name",
    "smith_normal_form",
    "square",
    "symmetric",
    "table_subgroup",
    "todd_coxeter",
    "v_unit",
    "validate",
    "verify_table",
    "xmod_from_json",
    "xmod_isomorphic",
    "xmod_to_json",
]
