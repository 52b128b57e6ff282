from .poly import (
    LambdaPoly,
    MCoeffPoly,
    cauchy_root_bound,
    format_m_poly,
    interpolate_m,
    lagrange_coefficients,
    lambda_poly_eval,
)
from .quadext import QuadExtScalar, quadext_arith
from .rational import Rational, exact_sqrt, format_rational, parse_rational, to_rational

__all__ = [
    "LambdaPoly",
    "MCoeffPoly",
    "QuadExtScalar",
    "Rational",
    "cauchy_root_bound",
    "exact_sqrt",
    "format_m_poly",
    "format_rational",
    "interpolate_m",
    "lagrange_coefficients",
    "lambda_poly_eval",
    "parse_rational",
    "quadext_arith",
    "to_rational",
]
