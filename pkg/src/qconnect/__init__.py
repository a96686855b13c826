"""Exact inversion and connection coefficients for q-polynomial families.

The package computes, with exact Gaussian-rational arithmetic, the
coefficients that expand one basic hypergeometric polynomial family (or a
basis of q-shifted / paired factorial products) in another, checks every
shipped closed form against an independent brute-force oracle, and keeps a
ledger of printed reference formulas that fail that check together with
their working replacements.
"""

from .coeffs import (
    CORRECTIONS,
    CorrectionEntry,
    NOTATION_NOTES,
    closed_form_connection,
    closed_form_inversion,
    compose,
    connect_basic,
    connect_classical,
    definition_coefficients,
    invert_basic,
    invert_classical,
    self_inverse_check,
)
from .errors import (
    BindingError,
    ContextDegreeExceeded,
    DegenerateLeadingCoefficient,
    DenominatorVanishes,
    InvalidContext,
    MixedContexts,
    NonMonicInput,
    PreconditionViolated,
    QConnectError,
    ScalarParseError,
    UnknownFamily,
    UnknownPair,
    UnknownRow,
    VanishingFactor,
    VariableMismatch,
)
from .families import (
    FamilyInstance,
    FamilySpec,
    family_basis_element,
    family_polynomial,
    make_instance,
    registry_ids,
    registry_lookup,
)
from .oracle import (
    VerificationReport,
    oracle_connection,
    oracle_inversion,
    recursive_invert,
    verify_pointwise,
)
from .phi import PhiSpec, eval_hyp_scalar, eval_phi_poly, eval_phi_scalar, phi_spec
from .poly import Basis, Polynomial, basis_element, linear_combination, poly_eval, to_monomial
from .scalar import (
    GaussScalar,
    QContext,
    Rational,
    parse_scalar,
    qbinomial,
    qpochhammer,
    qpochhammer_multi,
    qpochhammer_negpow,
    rising_factorial,
    scalar,
)
from .vectors import CoefficientVector, kronecker_delta

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BindingError",
    "CORRECTIONS",
    "CoefficientVector",
    "ContextDegreeExceeded",
    "CorrectionEntry",
    "DegenerateLeadingCoefficient",
    "DenominatorVanishes",
    "FamilyInstance",
    "FamilySpec",
    "GaussScalar",
    "InvalidContext",
    "MixedContexts",
    "NOTATION_NOTES",
    "NonMonicInput",
    "PhiSpec",
    "Polynomial",
    "PreconditionViolated",
    "QConnectError",
    "QContext",
    "Rational",
    "ScalarParseError",
    "UnknownFamily",
    "UnknownPair",
    "UnknownRow",
    "VanishingFactor",
    "VariableMismatch",
    "VerificationReport",
    "basis_element",
    "closed_form_connection",
    "closed_form_inversion",
    "compose",
    "connect_basic",
    "connect_classical",
    "definition_coefficients",
    "eval_hyp_scalar",
    "eval_phi_poly",
    "eval_phi_scalar",
    "family_basis_element",
    "family_polynomial",
    "invert_basic",
    "invert_classical",
    "kronecker_delta",
    "linear_combination",
    "make_instance",
    "oracle_connection",
    "oracle_inversion",
    "parse_scalar",
    "phi_spec",
    "poly_eval",
    "qbinomial",
    "qpochhammer",
    "qpochhammer_multi",
    "qpochhammer_negpow",
    "recursive_invert",
    "registry_ids",
    "registry_lookup",
    "rising_factorial",
    "scalar",
    "self_inverse_check",
    "to_monomial",
    "verify_pointwise",
]
