"""Checked identities: the Hermite transformation, its instances and helpers."""

from .checks import (
    COROLLARIES,
    DISK,
    SeriesTailWarning,
    addition_check,
    closed_form_check,
    closed_form_rhs_terms,
    coefficient_check,
    corollary_check,
    corollary_generic_check,
    corollary_sides,
    derivative_identity_check,
    genfunc_check,
    involution_check,
    landen_check,
    lemma1_check,
    mehler_check,
    mehler_closed_form,
    theorem1_check,
    transformed_coefficients,
    vandermonde_check,
)
from .registry import (
    REGISTRY,
    IdentityInstance,
    Param,
    get_identity,
    identity_ids,
    run_suite,
    suite_tasks,
)
from .report import (
    CLOSED_FORM,
    DEFAULT_TOLERANCE,
    EXACT,
    NUMERIC,
    SCHEMA_FIELDS,
    CheckReport,
    Tolerance,
    format_csv,
    format_text,
)
