"""Dynamical zeta functions of integer matrices acting on the d-torus.

An integer d-by-d matrix M induces an endomorphism of the torus R^d/Z^d.
The number of isolated fixed points of the m-th iterate is
|det(1 - M^m)|, and the signed count det(1 - M^m) is the Lefschetz number.
Both exponential generating series sum to rational functions with integer
coefficients.  The Lefschetz function comes out of an alternating product
of exterior-power determinants; the unsigned one follows from it after a
sign substitution governed by the real eigenvalues beyond -1 and 1.
All of this is computed exactly; floating point enters only in the
root-modulus estimates behind growth rate and hyperbolicity.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .linalg import IntMatrix, det_exact, exterior_power, mat_pow
from .polynomials import (
    IntPoly,
    RatFunc,
    cyclotomic_polynomial,
    deflate_at,
    det_poly_linear,
    divexact,
    multiplicity_at,
    poly_gcd,
    squarefree_decomposition,
)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SignData:
    """Eigenvalue bookkeeping at the fixed points of the unit interval.

    sigma and tau are the multiplicities of 1 and -1 as eigenvalues; delta
    flips the counting variable when an odd number of real eigenvalues sits
    below -1, epsilon inverts the whole function when an odd number of real
    eigenvalues lies outside [-1, 1].
    """

    sigma: int
    tau: int
    delta: int
    epsilon: int


@dataclass(frozen=True)
class GrowthRate:
    value: float
    error: float


@dataclass(frozen=True)
class ClassificationReport:
    singular: bool
    root_of_unity_orders: tuple[int, ...]
    quasihyperbolic: bool
    hyperbolic: bool | None
    hyperbolic_flag: str  # "exact", "numeric" or "indeterminate"


@dataclass(frozen=True)
class FunctionalEquationResult:
    holds: bool
    lefschetz_lhs: RatFunc
    lefschetz_rhs: RatFunc
    artin_mazur_lhs: RatFunc
    artin_mazur_rhs: RatFunc


@dataclass(frozen=True)
class ZetaReport:
    matrix: IntMatrix
    lefschetz_zeta: RatFunc
    artin_mazur_zeta: RatFunc
    signs: SignData
    counts: tuple[int, ...]
    signed_counts: tuple[int, ...]
    exponents: tuple[int, ...]
    classification: ClassificationReport
    functional_equation_holds: bool | None
    growth_rate: GrowthRate | None


def characteristic_polynomial(mat: IntMatrix) -> IntPoly:
    """det(x*1 - M), monic of degree dim."""
    return det_poly_linear(-mat, IntMatrix.identity(mat.dim))


def char_factors(mat: IntMatrix) -> tuple[IntPoly, ...]:
    """The determinant factors det(1 - z*Lambda^k(M)) for k = 0..dim.

    Each factor has constant coefficient 1; the k = 0 factor is 1 - z and
    the top one is 1 - det(M) z.
    """
    factors = []
    for k in range(mat.dim + 1):
        power = exterior_power(mat, k)
        size = power.dim
        factors.append(det_poly_linear(IntMatrix.identity(size), -power))
    return tuple(factors)


def lefschetz_zeta(mat: IntMatrix) -> RatFunc:
    """Rational function summing the signed fixed-point counts det(1 - M^m).

    Alternating product of the exterior-power factors: odd k upstairs,
    even k downstairs.
    """
    factors = char_factors(mat)
    num = IntPoly((1,))
    den = IntPoly((1,))
    for k, p in enumerate(factors):
        if k % 2:
            num = num * p
        else:
            den = den * p
    return RatFunc(num, den)


def signed_count(mat: IntMatrix, m: int) -> int:
    """Lefschetz number of the m-th iterate, det(1 - M^m)."""
    if m < 1:
        raise ValueError("iterate must be positive")
    return det_exact(IntMatrix.identity(mat.dim) - mat_pow(mat, m))


def isolated_fixed_count(mat: IntMatrix, m: int) -> int:
    """Number of isolated fixed points of the m-th iterate, |det(1 - M^m)|.

    Zero means the fixed set contains a subtorus and no isolated count
    exists.
    """
    return abs(signed_count(mat, m))


def _sign_after_deflating(p: IntPoly, order: int) -> int:
    """Sign of p(x)/(x-1)**order at x = 1; the division must be exact."""
    for _ in range(order):
        p = deflate_at(p, 1)
    value = p(1)
    if value == 0:
        raise ArithmeticError("sign evaluation hit an unexpected zero")
    return 1 if value > 0 else -1


def signs(mat: IntMatrix) -> SignData:
    """Multiplicities of the eigenvalues +-1 and the sign pair (delta, epsilon).

    The general path factors the characteristic polynomial as
    (x-1)^sigma (x+1)^tau q(x) and reads the signs off exact evaluations
    after deflation.  When sigma = tau = 0 these must agree with the plain
    determinant signs of 1+M and 1-M, which is asserted.
    """
    ident = IntMatrix.identity(mat.dim)
    p = characteristic_polynomial(mat)
    q = det_poly_linear(mat, ident)  # det(x*1 + M)
    sigma = multiplicity_at(p, 1)
    tau = multiplicity_at(p, -1)
    delta = _sign_after_deflating(q, tau)
    epsilon = delta * _sign_after_deflating(p, sigma)
    if sigma == 0 and tau == 0:
        det_plus = det_exact(ident + mat)
        det_minus = det_exact(ident - mat)
        fast_delta = 1 if det_plus > 0 else -1
        fast_epsilon = fast_delta * (1 if det_minus > 0 else -1)
        if (delta, epsilon) != (fast_delta, fast_epsilon):
            raise AssertionError("sign fast path disagrees with the general path")
    return SignData(sigma=sigma, tau=tau, delta=delta, epsilon=epsilon)


def artin_mazur_zeta(mat: IntMatrix) -> RatFunc:
    """Rational function summing the isolated fixed-point counts |det(1 - M^m)|."""
    return _compose_signs(lefschetz_zeta(mat), signs(mat))


def _compose_signs(lefschetz: RatFunc, sign_data: SignData) -> RatFunc:
    return lefschetz.substitute_signed(sign_data.delta) ** sign_data.epsilon


def _mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def euler_exponents(mat: IntMatrix, count: int) -> list[int]:
    """Exponents c_m of the product form prod (1 - z^m)^(-c_m).

    Moebius inversion of the fixed-point counts; every c_m is an integer,
    anything else signals an implementation bug.
    """
    if count < 1:
        raise ValueError("count must be positive")
    a = [isolated_fixed_count(mat, m) for m in range(1, count + 1)]
    out = []
    for m in range(1, count + 1):
        total = sum(_mobius(m // ell) * a[ell - 1] for ell in range(1, m + 1) if m % ell == 0)
        q, r = divmod(total, m)
        if r:
            raise ArithmeticError(f"orbit exponent at m={m} is not an integer")
        out.append(q)
    return out


def generating_function(mat: IntMatrix) -> RatFunc:
    """Ordinary generating function of the isolated fixed-point counts."""
    return artin_mazur_zeta(mat).log_derivative()


def _radical(p: IntPoly) -> IntPoly:
    scale, factors = squarefree_decomposition(p)
    out = IntPoly((1,))
    for q, _ in factors:
        out = out * q
    return out


def _isolate_root_moduli(p: IntPoly, accuracy: float) -> tuple[list[float], float]:
    """Moduli of all complex roots of p, each within +-accuracy.

    Runs mpmath's simultaneous root iteration at increasing precision until
    the reported error bound is below the requested accuracy.
    """
    coeffs = list(reversed(p.coeffs))
    dps = 30
    while dps <= 4000:
        with mpmath.workdps(dps):
            try:
                roots, err = mpmath.polyroots(coeffs, maxsteps=200, extraprec=60, error=True)
            except mpmath.libmp.NoConvergence:
                roots = None
            if roots is not None and float(err) < accuracy:
                return [float(abs(r)) for r in roots], float(err)
        dps *= 2
    raise ArithmeticError("root isolation did not converge")


def growth_rate(mat: IntMatrix, tolerance: float = DEFAULT_TOLERANCE) -> GrowthRate | None:
    """Exponential growth rate of the fixed-point counts.

    This is the reciprocal of the smallest root modulus of the reduced
    denominator of the generating function; absent (None) when that
    denominator is constant.  The value is correct to within the stated
    tolerance.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    den = generating_function(mat).den
    if den.degree < 1:
        return None
    radical = _radical(den)
    accuracy = tolerance / 8
    while True:
        moduli, err = _isolate_root_moduli(radical, accuracy)
        rho = min(moduli)
        if rho > err and err / (rho * (rho - err)) <= tolerance / 2:
            return GrowthRate(value=1.0 / rho, error=tolerance)
        accuracy /= 16


def functional_equation_check(mat: IntMatrix) -> FunctionalEquationResult:
    """Compare both zeta functions at z against 1/(det(M) z).

    With D = det(M) nonzero and B = D in dimension one (B = 1 otherwise),
    the Lefschetz function satisfies f(1/(Dz)) = B * f(z)^(+-1) with the
    sign of the exponent given by the parity of the dimension, and the
    unsigned function picks up B^epsilon instead of B.
    """
    d = det_exact(mat)
    if d == 0:
        raise ValueError("functional equation undefined for a singular matrix")
    dim = mat.dim
    b = d if dim == 1 else 1
    exponent = 1 if dim % 2 == 0 else -1
    lefschetz = lefschetz_zeta(mat)
    sign_data = signs(mat)
    artin_mazur = _compose_signs(lefschetz, sign_data)
    lef_lhs = lefschetz.substitute_reciprocal(d)
    lef_rhs = RatFunc(b) * lefschetz**exponent
    b_eps = RatFunc(b) if sign_data.epsilon == 1 else RatFunc(1, b)
    am_lhs = artin_mazur.substitute_reciprocal(d)
    am_rhs = b_eps * artin_mazur**exponent
    return FunctionalEquationResult(
        holds=(lef_lhs == lef_rhs and am_lhs == am_rhs),
        lefschetz_lhs=lef_lhs,
        lefschetz_rhs=lef_rhs,
        artin_mazur_lhs=am_lhs,
        artin_mazur_rhs=am_rhs,
    )


def _euler_phi(n: int) -> int:
    out = n
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            out -= out // d
        d += 1
    if n > 1:
        out -= out // n
    return out


def _divides(divisor: IntPoly, dividend: IntPoly) -> bool:
    try:
        divexact(dividend, divisor)
    except ValueError:
        return False
    return True


def classify(mat: IntMatrix, tolerance: float = DEFAULT_TOLERANCE) -> ClassificationReport:
    """Spectral classification of the torus endomorphism.

    Roots of unity among the eigenvalues are detected exactly through
    cyclotomic divisors of the characteristic polynomial (phi(n) <= dim
    bounds the candidates).  Quasihyperbolic means there are none.
    Hyperbolicity (no eigenvalue modulus 1) is decided exactly when the
    characteristic polynomial shares no factor with its reciprocal, and
    numerically otherwise; a non-cyclotomic root modulus within the
    tolerance of 1 is reported as indeterminate, not guessed.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    p = characteristic_polynomial(mat)
    singular = p.constant_coefficient == 0
    dim = mat.dim
    # phi(n) >= sqrt(n/2), so phi(n) <= dim forces n <= 2 dim^2
    orders = tuple(
        n
        for n in range(1, 2 * dim * dim + 1)
        if _euler_phi(n) <= dim and _divides(cyclotomic_polynomial(n), p)
    )
    quasihyperbolic = not orders
    if orders:
        return ClassificationReport(
            singular=singular,
            root_of_unity_orders=orders,
            quasihyperbolic=False,
            hyperbolic=False,
            hyperbolic_flag="exact",
        )
    reciprocal = IntPoly(tuple(reversed(p.coeffs)))
    if poly_gcd(p, reciprocal).degree == 0:
        # no root can pair with its inverse, so none sits on the unit circle
        return ClassificationReport(
            singular=singular,
            root_of_unity_orders=(),
            quasihyperbolic=True,
            hyperbolic=True,
            hyperbolic_flag="exact",
        )
    moduli, _ = _isolate_root_moduli(_radical(p), tolerance / 16)
    if all(abs(mu - 1.0) > tolerance for mu in moduli):
        return ClassificationReport(
            singular=singular,
            root_of_unity_orders=(),
            quasihyperbolic=True,
            hyperbolic=True,
            hyperbolic_flag="numeric",
        )
    return ClassificationReport(
        singular=singular,
        root_of_unity_orders=(),
        quasihyperbolic=True,
        hyperbolic=None,
        hyperbolic_flag="indeterminate",
    )


def build_report(
    mat: IntMatrix, max_m: int = 10, tolerance: float = DEFAULT_TOLERANCE
) -> ZetaReport:
    """Assemble every computed quantity for one matrix."""
    if max_m < 1:
        raise ValueError("max_m must be positive")
    sign_data = signs(mat)
    lefschetz = lefschetz_zeta(mat)
    artin_mazur = _compose_signs(lefschetz, sign_data)
    signed = tuple(signed_count(mat, m) for m in range(1, max_m + 1))
    counts = tuple(abs(x) for x in signed)
    exponents = tuple(euler_exponents(mat, max_m))
    classification = classify(mat, tolerance)
    if classification.singular:
        feq = None
    else:
        feq = functional_equation_check(mat).holds
    return ZetaReport(
        matrix=mat,
        lefschetz_zeta=lefschetz,
        artin_mazur_zeta=artin_mazur,
        signs=sign_data,
        counts=counts,
        signed_counts=signed,
        exponents=exponents,
        classification=classification,
        functional_equation_holds=feq,
        growth_rate=growth_rate(mat, tolerance),
    )
