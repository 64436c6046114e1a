"""Finite labeled-graph operads with a quantale-valued presheaf calculus."""

from .enriched import (
    EnrichedCategory,
    EnrichedFunctor,
    enumerate_categories,
    evaluate_morphism_inequality,
    evaluate_on_graph,
    is_enriched_functor,
    opposite,
    trivial_category,
    validate_category,
)
from .errors import OplabError
from .graphs import (
    Graph,
    GraphMorphism,
    LabelSet,
    OperadTag,
    STAR,
    add_loop,
    check_operad_axioms,
    classify_graph_morphism,
    compose_graph_morphisms,
    contract_path,
    delete_edge,
    empty_graph,
    enumerate_graph_morphisms,
    factorize_graph_morphism,
    identity_morphism,
    iso_graphs,
    labelset,
    pairing,
    pairing_inert,
    path_graph,
    relabel_graph,
    relabel_morphism,
    reverse_graph,
    reverse_morphism,
    tensor_graphs,
    tensor_morphisms,
    validate_morphism,
)
from .pointed import (
    MapClass,
    PointedMap,
    classify_pointed,
    compose_pointed,
    factorize_pointed,
    identity_pointed,
    rho,
)
from .presheaf import (
    Copresheaf,
    ModuleMap,
    Presheaf,
    PresheafLattice,
    check_duality_bijection,
    density_decompose,
    duality_to_copresheaf,
    duality_to_modulemap,
    enumerate_copresheaves,
    enumerate_modulemaps,
    enumerate_presheaves,
    ev,
    free_presheaf,
    join_presheaves,
    leq_presheaves,
    meet_presheaves,
    presheaf_lattice,
    pullback,
    pushforward,
    rep,
    tensor_action,
    validate_copresheaf,
    validate_modulemap,
    validate_presheaf,
    yoneda_check,
    yoneda_copresheaf,
)
from .quantale import (
    ModuleLattice,
    Quantale,
    boolean_quantale,
    join,
    left_self_module,
    lukasiewicz,
    make_builtin,
    meet,
    residual_left,
    residual_right,
    reverse_quantale,
    right_self_module,
    transpose_module,
    trivial_quantale,
    validate_module,
    validate_quantale,
)
from .report import Check, ValidationReport
from .simplex import (
    DeltaClass,
    DeltaOpMorphism,
    LabeledSimplex,
    cartesian_lift,
    check_approximation,
    classify_delta,
    compose_delta,
    cut_morphism,
    cut_object,
    enumerate_delta_morphisms,
    enumerate_simplices,
    identity_delta,
    lcut,
    lcut_morphism,
    structural_inert,
)

__version__ = "0.1.0"
