"""Brute-force cross-checks for the zeta pipeline.

Everything here recomputes a quantity through a route disjoint from the
main one: fixed points are counted through Smith normal form instead of a
determinant, enumerated as explicit rational points on the torus, the zeta
series is rebuilt by exponentiating the count sum, and the sign pair is
read off Sturm root counts of the characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .linalg import IntMatrix, mat_pow, smith_normal_form
from .polynomials import (
    REGION_ABOVE_ONE,
    REGION_BELOW_MINUS_ONE,
    det_poly_linear,
    real_root_count_region,
)
from . import zeta as _zeta

ENUMERATION_LIMIT = 10_000


@dataclass(frozen=True)
class FixedPointSet:
    """Fixed points of one iterate: finite tells whether the set is discrete.

    For a finite set, points holds the torus coordinates in [0, 1)^d sorted
    lexicographically and count their number; both are None otherwise.
    """

    finite: bool
    points: tuple[tuple[Fraction, ...], ...] | None
    count: int | None


def snf_fixed_count(mat: IntMatrix, m: int) -> int:
    """|det(1 - M^m)| as the product of Smith normal form divisors.

    Independent of the determinant route: elimination over Z only.  Zero
    when some divisor vanishes, meaning the fixed set is not discrete.
    """
    if m < 1:
        raise ValueError("iterate must be positive")
    system = IntMatrix.identity(mat.dim) - mat_pow(mat, m)
    _, diag, _ = smith_normal_form(system)
    out = 1
    for i in range(diag.dim):
        d = diag[i, i]
        if d == 0:
            return 0
        out *= d
    return out


def enumerate_fixed_points(mat: IntMatrix, m: int) -> FixedPointSet:
    """Solve M^m x = x mod 1 exactly.

    The solutions of (1 - M^m) x in Z^d come out of the Smith form
    U(1-M^m)V = D as x = V y with y_i ranging over k/d_i.  Each candidate
    is verified by exact substitution.  Raises when a finite solution set
    would exceed the enumeration limit.
    """
    if m < 1:
        raise ValueError("iterate must be positive")
    dim = mat.dim
    power = mat_pow(mat, m)
    system = IntMatrix.identity(dim) - power
    _, diag, trans = smith_normal_form(system)
    divisors = [diag[i, i] for i in range(dim)]
    if any(d == 0 for d in divisors):
        return FixedPointSet(finite=False, points=None, count=None)
    total = 1
    for d in divisors:
        total *= d
    if total > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration too large: {total} fixed points")
    points = []
    for ks in product(*(range(d) for d in divisors)):
        y = [Fraction(k, d) for k, d in zip(ks, divisors)]
        x = tuple(
            sum(trans[i, j] * y[j] for j in range(dim)) % 1 for i in range(dim)
        )
        image = [
            sum(power[i, j] * x[j] for j in range(dim)) - x[i] for i in range(dim)
        ]
        if any(entry.denominator != 1 for entry in image):
            raise AssertionError("candidate fixed point failed exact substitution")
        points.append(x)
    points.sort()
    return FixedPointSet(finite=True, points=tuple(points), count=total)


def exp_sum_zeta_series(mat: IntMatrix, order: int) -> list[Fraction]:
    """Zeta series through z**order, rebuilt from the counts alone.

    Exponentiates sum a_m z^m / m with the recurrence f' = g' f on exact
    rationals; no rational-function arithmetic involved.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    g = [Fraction(0)] * (order + 1)
    for m in range(1, order + 1):
        g[m] = Fraction(_zeta.isolated_fixed_count(mat, m), m)
    f = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        f[k] = sum(j * g[j] * f[k - j] for j in range(1, k + 1)) / k
    return f


def euler_product_series(exponents, order: int) -> list[Fraction]:
    """Series through z**order of prod_m (1 - z^m)^(-c_m).

    Each factor expands through exact binomials, so this reconstructs the
    zeta series from orbit data alone.
    """
    coeffs = [Fraction(1)] + [Fraction(0)] * order
    for m, c in enumerate(exponents, start=1):
        if m > order:
            break
        factor = [Fraction(0)] * (order + 1)
        for j in range(order // m + 1):
            if c >= 0:
                w = comb(c + j - 1, j) if j else 1
            else:
                w = (-1) ** j * comb(-c, j)
            factor[m * j] = Fraction(w)
        merged = [Fraction(0)] * (order + 1)
        for i, a in enumerate(coeffs):
            if a:
                for j in range(0, order - i + 1, m):
                    if factor[j]:
                        merged[i + j] += a * factor[j]
        coeffs = merged
    return coeffs


def sturm_sign_oracle(mat: IntMatrix) -> tuple[int, int]:
    """(delta, epsilon) from real root counts of the characteristic polynomial.

    delta = (-1)^(roots below -1), epsilon adds the roots above 1; the open
    regions exclude the eigenvalues -1 and 1 themselves.  Counts come from
    Sturm chains only.
    """
    p = det_poly_linear(-mat, IntMatrix.identity(mat.dim))
    below = real_root_count_region(p, REGION_BELOW_MINUS_ONE)
    above = real_root_count_region(p, REGION_ABOVE_ONE)
    delta = -1 if below % 2 else 1
    epsilon = -1 if (below + above) % 2 else 1
    return delta, epsilon
