from .compare import ComparisonReport, CoefficientRow, DisplayCheck, adjudicate, compare_routes, display_checks
from .printed import printed_bundle_norms, printed_poly, printed_table
from .registry import FormRegistry, register_default_forms
from .routes import (
    GENERAL_FORM_TERMS,
    QHAT_TERMS,
    FormTerm,
    QuadraticFormPoly,
    printed_fixture,
    q4_form,
    q4_from_general_form,
    q4_from_small_sphere_form,
    q4es_form,
    qhat_closed_form,
    qhat_form,
    term_values,
)
from .sections import BundleNorms, SymbolicNormalSection, apply_bar_laplacian, bundle_norm_polys, gradient_norm, pairing

__all__ = [
    "BundleNorms",
    "CoefficientRow",
    "ComparisonReport",
    "DisplayCheck",
    "FormRegistry",
    "FormTerm",
    "GENERAL_FORM_TERMS",
    "QHAT_TERMS",
    "QuadraticFormPoly",
    "SymbolicNormalSection",
    "adjudicate",
    "apply_bar_laplacian",
    "bundle_norm_polys",
    "compare_routes",
    "display_checks",
    "gradient_norm",
    "pairing",
    "printed_bundle_norms",
    "printed_fixture",
    "printed_poly",
    "printed_table",
    "q4_form",
    "q4_from_general_form",
    "q4_from_small_sphere_form",
    "q4es_form",
    "qhat_closed_form",
    "qhat_form",
    "register_default_forms",
    "term_values",
]
