"""Brill-Noether data for delta-nodal curves in the polarization system.

Parameters are (p, delta, k, epsilon): genus p of the polarization, number
of nodes delta, number of points k, surface type epsilon.  The normalized
curves have genus g = p - delta and carry pencils of degree k + epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .model import CurveClass, DivisorClass, DomainError, SurfaceContext


def bn_rho(p: int, r: int, d: int) -> int:
    """Brill-Noether number rho(p, r, d) = p - (r+1)(p - d + r)."""
    return p - (r + 1) * (p - d + r)


@dataclass(frozen=True)
class BNParams:
    p: int
    delta: int
    k: int
    epsilon: int

    def __post_init__(self) -> None:
        ctx = self.context()  # validates epsilon, p, k
        if not 0 <= self.delta <= self.p - 2 * self.epsilon:
            raise DomainError(
                "constraint violated: 0 <= delta <= p - 2*epsilon "
                f"(got delta={self.delta}, p={self.p}, epsilon={self.epsilon})")
        del ctx

    def context(self) -> SurfaceContext:
        return SurfaceContext(self.epsilon, self.p, self.k)

    @property
    def g(self) -> int:
        """Geometric genus of the nodal curves."""
        return self.p - self.delta

    @property
    def half_div(self) -> int:
        return self.k - 1 + 2 * self.epsilon

    @property
    def alpha(self) -> int:
        return (self.p - self.delta - self.epsilon) // (2 * self.half_div)

    @property
    def beta(self) -> int:
        # Lies in (-half_div, half_div] for every admissible parameter set.
        return ((2 * self.alpha + 1) * self.half_div
                - self.p + self.delta + self.epsilon)

    @property
    def rho(self) -> int:
        a = self.alpha
        return bn_rho(self.p, a, (self.k + self.epsilon) * a + self.delta)


def exists_pencil(params: BNParams) -> bool:
    """Existence of delta-nodal curves whose normalizations carry a pencil
    of degree k + epsilon: delta >= alpha*(p - delta - epsilon - (alpha+1)*half_div)."""
    a = params.alpha
    bound = a * (params.p - params.delta - params.epsilon
                 - params.half_div * (a + 1))
    return params.delta >= bound


def exists_pencil_via_rho(params: BNParams, l_max: int | None = None) -> bool:
    """Same decision through the Brill-Noether inequality
    rho(p, l, (k+epsilon)*l + delta) + epsilon*l*(l+2) >= 0 for all l >= 0;
    the left side is minimal at l = alpha, so scanning up to alpha + 2 is
    exhaustive."""
    if l_max is None:
        l_max = params.alpha + 2
    for l in range(l_max + 1):
        value = (bn_rho(params.p, l, (params.k + params.epsilon) * l + params.delta)
                 + params.epsilon * l * (l + 2))
        if value < 0:
            return False
    return True


def bn_dims(params: BNParams) -> tuple[int, int]:
    """(dimension of the nodal locus, dimension of the pencil variety)."""
    if not exists_pencil(params):
        raise DomainError(
            f"no pencil exists for (p, delta, k, epsilon)="
            f"({params.p}, {params.delta}, {params.k}, {params.epsilon})")
    locus = min(params.p - params.delta, 2 * (params.k - 1 + params.epsilon))
    pencils = max(0, 2 * (params.k - 1 + params.epsilon) - params.g)
    return locus, pencils


def curve_class(params: BNParams) -> CurveClass:
    """Class L - (p - delta + k - 1 + epsilon) * r of the rational curves."""
    return CurveClass(1, -(params.g + params.k - 1 + params.epsilon))


def dual_divisor(params: BNParams) -> DivisorClass:
    """Rational divisor class dual to curve_class under q."""
    n = params.g + params.k - 1 + params.epsilon
    return DivisorClass(Fraction(1), Fraction(-n, 2 * params.half_div))


class SquareReport(NamedTuple):
    value: Fraction
    rewritten: Fraction  # Brill-Noether form of the same number
    minimal: bool        # q equals the lower bound -(k + 3 - 2*epsilon)/2
    alpha: int
    beta: int
    rho: int


def minimal_square_bound(k: int, epsilon: int) -> Fraction:
    """Lower bound -(k + 3 - 2*epsilon)/2 for squares of wall curve classes."""
    return Fraction(-(k + 3 - 2 * epsilon), 2)


def curve_square(params: BNParams) -> SquareReport:
    """Exact square of curve_class(params) in its two equivalent forms."""
    n = params.g + params.k - 1 + params.epsilon
    denom = 2 * params.half_div
    value = 2 * (params.p - 1) - Fraction(n * n, denom)
    a, b, rho = params.alpha, params.beta, params.rho
    eps = params.epsilon
    rewritten = (2 * (rho + eps * a * (a + 2) + eps - 1)
                 - Fraction(b * b, denom))
    if value != rewritten:
        raise AssertionError(
            f"square formulas disagree at {params}: {value} != {rewritten}")
    half = params.half_div
    minimal = (params.p == a * (a + 1) * half + eps
               and params.delta == a * (a - 1) * half)
    # The bound is attained exactly at the parameters above, provided the
    # pencil exists; without existence the value can touch the bound anyway.
    if exists_pencil(params):
        assert minimal == (value == minimal_square_bound(params.k, eps))
    return SquareReport(value, rewritten, minimal, a, b, rho)


def is_wall_by_square(params: BNParams) -> bool:
    """Wall decision by the sign of the square (valid when the pencil exists)."""
    if not exists_pencil(params):
        raise DomainError(
            f"square criterion needs an existing pencil at (p, delta, k, epsilon)="
            f"({params.p}, {params.delta}, {params.k}, {params.epsilon})")
    return curve_square(params).value < 0
