"""Non-crossing forests on a circle, their q-counting polynomials and
cyclic sieving checks under rotation."""

from ._core import (
    Forest,
    ForestStream,
    InvariantViolation,
    Mark,
    all_marks,
    check_odd_half_turn_identity,
    classify_vertices,
    closed_form_eval,
    construct_c2_odd,
    construct_cd,
    count_by_enumeration,
    count_formula,
    cyclotomic,
    decompose_d2_odd,
    decompose_dd,
    divisors,
    enumerate_forests,
    enumerate_invariant,
    eval_at_root,
    f_poly,
    fixed_count_bijection,
    fixed_count_brute,
    q_binomial,
    q_lucas,
    verify_csp,
)

__all__ = [
    "Forest",
    "ForestStream",
    "InvariantViolation",
    "Mark",
    "all_marks",
    "check_odd_half_turn_identity",
    "classify_vertices",
    "closed_form_eval",
    "construct_c2_odd",
    "construct_cd",
    "count_by_enumeration",
    "count_formula",
    "cyclotomic",
    "decompose_d2_odd",
    "decompose_dd",
    "divisors",
    "enumerate_forests",
    "enumerate_invariant",
    "eval_at_root",
    "f_poly",
    "fixed_count_bijection",
    "fixed_count_brute",
    "q_binomial",
    "q_lucas",
    "verify_csp",
]
