"""Exact arithmetic and endomorphism calculus for the bicyclic extension
over the two-tail family {[0), [1)}.

The compiled core exposes the element arithmetic (multiply, inverse, Green
relations, the natural partial order), the endomorphism normal forms with
apply/compose/factor/classify, and the exhaustive law-check suite.
"""

from bwf2._core import (
    Element,
    EndoNormalForm,
    Family,
    LawReport,
    SweepRanges,
    WindowMap,
    apply,
    apply_pi,
    apply_pi_power,
    check_associativity,
    check_classification,
    check_composition_coherence,
    check_corner_subsemigroups,
    check_endomorphism_law,
    check_factorization_uniqueness,
    check_green_relations,
    check_homomorphism,
    check_idempotent_characterization,
    check_inverse_uniqueness,
    check_minimal_ideal,
    check_natural_order,
    check_pi_power_closed_form,
    check_pi_window,
    classify_window,
    compose,
    corner_membership,
    enumerate_normal_forms,
    factor,
    family_closure_witness,
    format_element,
    format_endo,
    green_related,
    in_pi_power_image,
    inverse,
    is_idempotent,
    multiply,
    natural_leq,
    oracle_family_interval,
    parse_element,
    parse_endo,
    predicates,
    run_default_suite,
    shift_intersect,
    unapply_pi_power,
    validate_family,
    window_elements,
)

__all__ = [
    "Element",
    "EndoNormalForm",
    "Family",
    "LawReport",
    "SweepRanges",
    "WindowMap",
    "apply",
    "apply_pi",
    "apply_pi_power",
    "check_associativity",
    "check_classification",
    "check_composition_coherence",
    "check_corner_subsemigroups",
    "check_endomorphism_law",
    "check_factorization_uniqueness",
    "check_green_relations",
    "check_homomorphism",
    "check_idempotent_characterization",
    "check_inverse_uniqueness",
    "check_minimal_ideal",
    "check_natural_order",
    "check_pi_power_closed_form",
    "check_pi_window",
    "classify_window",
    "compose",
    "corner_membership",
    "enumerate_normal_forms",
    "factor",
    "family_closure_witness",
    "format_element",
    "format_endo",
    "green_related",
    "in_pi_power_image",
    "inverse",
    "is_idempotent",
    "multiply",
    "natural_leq",
    "oracle_family_interval",
    "parse_element",
    "parse_endo",
    "predicates",
    "run_default_suite",
    "shift_intersect",
    "unapply_pi_power",
    "validate_family",
    "window_elements",
]

__version__ = "0.1.0"
