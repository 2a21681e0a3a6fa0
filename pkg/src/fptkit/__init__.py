"""F-pure thresholds, F-jumping numbers, and test ideals over prime fields.

The package computes prime-characteristic singularity invariants of
polynomials in F_p[x_1..x_n] with exact rational arithmetic throughout:

* base-p candidate machinery (truncations, exponent pairs, candidate sets),
* sparse polynomial and Groebner arithmetic over F_p,
* Frobenius-root ideals with a digit recursion for huge exponents,
* test ideals, jumping numbers, F-pure thresholds, F-thresholds,
* perturbation-constancy harnesses for isolated singularities.
"""

from .basep import (
    CandidateSet,
    ExponentPair,
    candidate_set,
    canonical_pair,
    equal_by_truncation,
    format_rational,
    frac_orbit,
    is_exponent_pair,
    parse_rational,
    truncate,
)
from .constancy import (
    ConstancyReport,
    PerturbationRecord,
    SingularityProfile,
    constancy_report,
    jacobian_stability_check,
    local_ideal_equal,
    random_perturbation,
    singularity_profile,
    threshold_ideal_consistency,
)
from .errors import (
    DomainError,
    EngineError,
    InfeasibleError,
    NotMPrimaryError,
    ParseError,
    StabilityError,
)
from .froot import (
    FrobeniusRootEngine,
    frobenius_root,
    frobenius_root_ideal,
    frobenius_root_power,
)
from .groebner import (
    Ideal,
    artinian_length,
    bracket_power,
    ideal_equal,
    ideal_product,
    ideal_sum,
    jacobian,
    maximal_ideal,
    maximal_ideal_power,
    normal_form,
    reduced_groebner,
    scale,
)
from .parsing import parse_polynomial
from .poly import Polynomial, PolyRing, multiply, partial_derivative, power
from .testideal import (
    JumpingNumberReport,
    TestIdealComputer,
    TestIdealResult,
    default_bound,
    degree_bound,
    f_threshold,
    fpt,
    is_jumping_number,
    jumping_numbers_unit_interval,
    length_bound,
    nu,
    stabilization_exponent,
    test_ideal,
    test_ideal_left_limit,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "ConstancyReport",
    "DomainError",
    "EngineError",
    "ExponentPair",
    "FrobeniusRootEngine",
    "Ideal",
    "InfeasibleError",
    "JumpingNumberReport",
    "NotMPrimaryError",
    "ParseError",
    "PerturbationRecord",
    "Polynomial",
    "PolyRing",
    "SingularityProfile",
    "StabilityError",
    "TestIdealComputer",
    "TestIdealResult",
    "artinian_length",
    "bracket_power",
    "candidate_set",
    "canonical_pair",
    "constancy_report",
    "default_bound",
    "degree_bound",
    "equal_by_truncation",
    "f_threshold",
    "format_rational",
    "fpt",
    "frac_orbit",
    "frobenius_root",
    "frobenius_root_ideal",
    "frobenius_root_power",
    "ideal_equal",
    "ideal_product",
    "ideal_sum",
    "is_exponent_pair",
    "is_jumping_number",
    "jacobian",
    "jacobian_stability_check",
    "jumping_numbers_unit_interval",
    "length_bound",
    "local_ideal_equal",
    "maximal_ideal",
    "maximal_ideal_power",
    "multiply",
    "normal_form",
    "nu",
    "parse_polynomial",
    "parse_rational",
    "partial_derivative",
    "power",
    "random_perturbation",
    "reduced_groebner",
    "scale",
    "singularity_profile",
    "stabilization_exponent",
    "test_ideal",
    "test_ideal_left_limit",
    "threshold_ideal_consistency",
    "truncate",
]
