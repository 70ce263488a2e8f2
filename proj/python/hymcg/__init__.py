"""Exact combinatorics of surfaces with an order-2 symmetry.

Thin wrapper around the compiled extension; every public name lives there.
"""

from ._hymcg import (  # noqa: F401
    CutComponent,
    Error,
    GroupClosure,
    HyperellipticSurface,
    HypCutProfile,
    LaminarFamily,
    LiftResult,
    Permutation,
    QuotientProfile,
    StabilizerProfile,
    StableTree,
    Surface,
    SympMatrix,
    SymmetricCurveClass,
    TreeVertex,
    TwistGenerator,
    TwistWord,
    braid_relations_hold,
    chain_classes,
    chain_transvections,
    classify_curve,
    complex_dimension,
    count_vertex_orbits,
    cut_profile,
    enumerate_simplices,
    evaluate,
    family_to_tree,
    group_closure,
    homology,
    identity_matrix,
    involution_word,
    level_membership,
    lift_multicurve,
    make_hyperelliptic,
    make_surface,
    parse_family,
    parse_word,
    perm_group_order,
    quotient_surface,
    random_laminar_family,
    reduce,
    rho_w,
    sp_order,
    stabilizer_profile,
    transvection,
    tree_to_family,
)

__version__ = "0.1.0"
