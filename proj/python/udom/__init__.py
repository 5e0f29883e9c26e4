"""Computations with continuous t-norms, [0,1]-orders, way-below relations
and [0,1]-approach spaces."""

from ._udom import (  # noqa: F401
    ApproachTable,
    FiniteQOrder,
    InputError,
    ParamStructure,
    ScottContext,
    TNorm,
    check_approach_axioms,
    check_continuity,
    check_continuity_finite,
    check_interpolation,
    check_q_order,
    classify_injectivity,
    closure,
    cotensor,
    d_map,
    gamma,
    grid_snapshot,
    hom,
    is_compact,
    is_forward_cauchy,
    is_scott_closed,
    kappa_membership,
    omega_of,
    product_order,
    scott_closure,
    scott_context_finite,
    scott_context_param,
    sigma_delta,
    sigma_product_check,
    sobriety_witness,
    space_k,
    sub,
    supremum_of_weight,
    verify_certificate,
    verify_quantale_laws,
    way_below,
    way_below_param,
    yoneda,
)

__all__ = [n for n in dir() if not n.startswith("_")]
