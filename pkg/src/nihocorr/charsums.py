"""Quadratic character sums over GF(q) and the elliptic-curve evaluation of

    lambda_q = sum_{x in GF(q)} eta((x^2 - 4)(2x + 1)(2x + 5)).

For p >= 7 the sum equals -1 - (alpha^m + beta^m) where alpha, beta are the
roots of T^2 + aT + p and a = #E(GF(p)) - p for E: y^2 = x(x - 5)(x + 27)
(affine points).
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DegenerateLeadingCoefficient, EvenCharacteristic, SmallCharacteristic
from .field import FieldContext, FieldElement, quadratic_character
from .numtheory import QuadraticIntSequence, legendre, lucas_sequence_term


@dataclass(frozen=True)
class EllipticTrace:
    p: int
    Np: int
    a: int

    def __post_init__(self):
        if self.a * self.a > 4 * self.p:
            raise AssertionError(f"Hasse bound violated: a={self.a}, p={self.p}")


def char_sum_quadratic(a2: FieldElement, a1: FieldElement, a0: FieldElement) -> int:
    """sum_x eta(a2 x^2 + a1 x + a0) in closed form."""
    ctx = a2.ctx
    if ctx.p == 2:
        raise EvenCharacteristic("needs odd q")
    if not a2:
        raise DegenerateLeadingCoefficient("a2 must be nonzero")
    d = a1 * a1 - 4 * a0 * a2
    eta_a2 = quadratic_character(a2)
    if d:
        return -eta_a2
    return (ctx.order - 1) * eta_a2


def char_sum_direct(coeffs, ctx: FieldContext) -> int:
    """sum_x eta(f(x)) by summation over all of GF(q); coeffs high degree first."""
    t = ctx.tables
    x = t.all_elements
    acc = np.zeros_like(x)
    for c in coeffs:
        acc = t.add(t.mul(acc, x), int(ctx(c).value))
    return int(t.eta(acc).sum())


def lambda_direct(ctx: FieldContext) -> int:
    if ctx.p < 5:
        raise SmallCharacteristic("lambda is defined here for p >= 5")
    t = ctx.tables
    x = t.all_elements
    x2m4 = t.sub(t.mul(x, x), t.const(4))
    two_x = t.scale(x, t.const(2))
    f = t.mul(t.mul(x2m4, t.add(two_x, t.const(1))), t.add(two_x, t.const(5)))
    return int(t.eta(f).sum())


def count_curve_points(p: int) -> EllipticTrace:
    """Affine points of y^2 = x(x - 5)(x + 27) over GF(p)."""
    if p < 7:
        raise SmallCharacteristic("the curve is used for p >= 7")
    total = sum(1 + legendre(x * (x - 5) * (x + 27), p) for x in range(p))
    return EllipticTrace(p, total, total - p)


def lambda_closed(p: int, m: int) -> int:
    if p < 5:
        raise SmallCharacteristic("lambda is defined here for p >= 5")
    if p == 5:
        return -1 - (-1) ** m
    a = count_curve_points(p).a
    seq = QuadraticIntSequence.power_sums(-a, p)
    return -1 - lucas_sequence_term(seq, m)


def hasse_bound_holds(trace: EllipticTrace) -> bool:
    return abs(trace.a) <= 2 * math.sqrt(trace.p)
