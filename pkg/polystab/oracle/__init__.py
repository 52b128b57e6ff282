from .circle import (
    DiscreteImmersion,
    bochner_num,
    build_circle,
    bundle_norms_num,
    energy4_num,
    first_variation_num,
    rough_laplacian_num,
    second_variation_num,
    self_adjointness_num,
    shape_operator_eigenvalue,
)
from .derivatives import derivative, fd4_derivative, spectral_derivative
from .result import OracleResult
from .sphere2 import MODES, qhat_quadrature_m2, sphere_grid

__all__ = [
    "DiscreteImmersion",
    "MODES",
    "OracleResult",
    "bochner_num",
    "build_circle",
    "bundle_norms_num",
    "derivative",
    "energy4_num",
    "fd4_derivative",
    "first_variation_num",
    "qhat_quadrature_m2",
    "rough_laplacian_num",
    "second_variation_num",
    "self_adjointness_num",
    "shape_operator_eigenvalue",
    "spectral_derivative",
    "sphere_grid",
]
