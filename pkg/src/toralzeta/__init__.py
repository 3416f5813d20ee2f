"""Exact zeta functions of integer matrices acting on the d-torus.

Fixed-point counts of toral endomorphisms, the Lefschetz and Artin-Mazur
zeta functions as reduced rational functions over Z, orbit-product
exponents, sign data, growth rates, spectral classification, and
brute-force verification oracles.
"""

from .linalg import (
    IntMatrix,
    det_exact,
    exterior_power,
    mat_mul,
    mat_pow,
    smith_normal_form,
)
from .polynomials import (
    REGION_ABOVE_ONE,
    REGION_BELOW_MINUS_ONE,
    IntPoly,
    RatFunc,
    cyclotomic_polynomial,
    deflate_at,
    det_poly_linear,
    divexact,
    multiplicity_at,
    poly_gcd,
    real_root_count_region,
    squarefree_decomposition,
)
from .zeta import (
    DEFAULT_TOLERANCE,
    ClassificationReport,
    FunctionalEquationResult,
    GrowthRate,
    SignData,
    ZetaReport,
    artin_mazur_zeta,
    build_report,
    char_factors,
    characteristic_polynomial,
    classify,
    euler_exponents,
    functional_equation_check,
    generating_function,
    growth_rate,
    isolated_fixed_count,
    lefschetz_zeta,
    signed_count,
    signs,
)
from .oracle import (
    ENUMERATION_LIMIT,
    FixedPointSet,
    enumerate_fixed_points,
    euler_product_series,
    exp_sum_zeta_series,
    snf_fixed_count,
    sturm_sign_oracle,
)
from .cli import MatrixParseError, parse_matrix, render_matrix

__version__ = "0.1.0"

__all__ = [
    "IntMatrix",
    "mat_mul",
    "mat_pow",
    "det_exact",
    "exterior_power",
    "smith_normal_form",
    "IntPoly",
    "RatFunc",
    "poly_gcd",
    "divexact",
    "deflate_at",
    "multiplicity_at",
    "squarefree_decomposition",
    "real_root_count_region",
    "REGION_BELOW_MINUS_ONE",
    "REGION_ABOVE_ONE",
    "det_poly_linear",
    "cyclotomic_polynomial",
    "SignData",
    "GrowthRate",
    "ClassificationReport",
    "FunctionalEquationResult",
    "ZetaReport",
    "DEFAULT_TOLERANCE",
    "characteristic_polynomial",
    "char_factors",
    "lefschetz_zeta",
    "artin_mazur_zeta",
    "signed_count",
    "isolated_fixed_count",
    "signs",
    "euler_exponents",
    "generating_function",
    "growth_rate",
    "functional_equation_check",
    "classify",
    "build_report",
    "FixedPointSet",
    "ENUMERATION_LIMIT",
    "snf_fixed_count",
    "enumerate_fixed_points",
    "exp_sum_zeta_series",
    "euler_product_series",
    "sturm_sign_oracle",
    "MatrixParseError",
    "parse_matrix",
    "render_matrix",
]
