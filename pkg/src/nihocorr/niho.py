"""Value distribution of the cross-correlation C_d(tau) for the Niho
decimation d = 3(q - 1) + 1 over GF(q^2), q = p^m.

Everything goes through the root count N(a) of

    F_a(z) = z^5 + a_bar z^3 + a z^2 + 1

on the unit circle U_{q+1}: the correlation value attached to a is
s(a) = q (N(a) - 1) - 1.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .charsums import lambda_closed, lambda_direct
from .codes import b5_pure_weight
from .errors import (
    GcdViolation,
    IntegralityFailure,
    MismatchError,
    NegativeFrequency,
    SmallCharacteristic,
    TooLarge,
)
from .field import FieldContext, FieldElement, build_field_context
from .k3 import a_q, q_over_3
from .numtheory import jacobi_symbol_power

B3_MAX_Q = 350
N4_MAX_Q = 350
ORACLE_MAX_Q2 = 10 ** 8
COMPLEX_SUM_MAX_Q = 13


@dataclass(frozen=True)
class RootCountHistogram:
    counts: tuple  # N_0 .. N_5
    q: int

    def __post_init__(self):
        if len(self.counts) != 6 or min(self.counts) < 0:
            raise ValueError(f"bad histogram {self.counts}")


@dataclass(frozen=True)
class DistributionTable:
    rows: tuple  # ((value, frequency), ...) in increasing value order
    p: int
    m: int

    @property
    def q(self) -> int:
        return self.p ** self.m

    def as_dict(self) -> dict:
        return dict(self.rows)

    def total(self) -> int:
        return sum(f for _, f in self.rows)


def correlation_values(q: int) -> list[int]:
    return [-q - 1, -1, q - 1, 2 * q - 1, 3 * q - 1, 4 * q - 1]


def decimation(p: int, m: int) -> int:
    return 3 * (p ** m - 1) + 1


def check_gcd_condition(p: int, m: int) -> bool:
    q = p ** m
    ok = math.gcd(decimation(p, m), q * q - 1) == 1
    if ok != (math.gcd(5, q + 1) == 1):
        raise AssertionError(f"gcd criteria disagree at p={p}, m={m}")
    return ok


def require_gcd(p: int, m: int):
    if not check_gcd_condition(p, m):
        raise GcdViolation(f"5 divides q + 1 = {p ** m + 1}; d is not a permutation exponent")


def _require_p5(p):
    if p < 5:
        raise SmallCharacteristic("this result is stated for p >= 5")


# -- root counting --------------------------------------------------------

def root_count(a: FieldElement) -> int:
    """N(a) by evaluating F_a on every z in U_{q+1}."""
    ctx = a.ctx
    q = ctx.q
    require_gcd(ctx.p, ctx.degree // 2)
    t = ctx.tables
    z = t.unit_circle
    a_bar = (a ** q).value
    f = t.add(t.add(t.power(z, 5), t.scale(t.power(z, 3), a_bar)),
              t.add(t.scale(t.power(z, 2), a.value), 1))
    return int((f == 0).sum())


def root_counts(ctx: FieldContext, method: str = "incidence") -> np.ndarray:
    """N(a) for every encoding a of GF(q^2).

    ``direct`` evaluates F_a(z) for all a at each z (O(q^3)).  ``incidence``
    uses that, for fixed z, the a with F_a(z) = 0 form the GF(q)-line
    a = -z^-2 + t k_z with k_z^(q-1) = -z^-1 (O(q^2)).
    """
    q = ctx.q
    require_gcd(ctx.p, ctx.degree // 2)
    if q * q > ORACLE_MAX_Q2:
        raise TooLarge(f"q^2 = {q * q} exceeds {ORACLE_MAX_Q2}")
    t = ctx.tables
    Q = ctx.order
    counts = np.zeros(Q, dtype=np.int8)
    U = t.unit_circle
    if method == "direct":
        a = t.all_elements
        a_bar = t.conj(a)
        for z in U:
            z2 = int(t.power(z, 2))
            z3 = int(t.power(z, 3))
            c = int(t.add(t.power(z, 5), 1))
            f = t.add(t.add(t.scale(a_bar, z3), t.scale(a, z2)), c)
            counts += f == 0
    elif method == "incidence":
        line = t.subfield
        for z in U:
            base = int(t.neg(t.inv(t.power(z, 2))))
            j = int(t.log[t.neg(t.inv(z))]) // (q - 1)
            k = int(t.exp[j])
            counts[t.add(t.scale(line, k), base)] += 1
    else:
        raise ValueError(f"unknown method {method!r}")
    return counts


def root_count_histogram(ctx: FieldContext, method: str = "incidence") -> RootCountHistogram:
    counts = np.bincount(root_counts(ctx, method), minlength=6)
    if len(counts) > 6:
        raise MismatchError("a quintic has more than five roots")
    return RootCountHistogram(tuple(int(c) for c in counts), ctx.q)


def moment_identities_check(hist: RootCountHistogram, p: int, m: int) -> bool:
    q = p ** m
    n = hist.counts
    moments = [sum((i - 1) ** k * n[i] for i in range(6)) for k in range(4)]
    return moments == [q * q, q, q * q, q * b3_closed(p, m)]


# -- b3, N4, N5 -----------------------------------------------------------

def b3_closed(p: int, m: int) -> int:
    q = p ** m
    return q + 2 if q % 3 == 2 else q


def b3_brute_force(ctx: FieldContext) -> int:
    """#{y in GF(q^2) : (y+1)^d - y^d = 1}."""
    q = ctx.q
    if q > B3_MAX_Q:
        raise TooLarge(f"q={q} exceeds {B3_MAX_Q}")
    t = ctx.tables
    d = decimation(ctx.p, ctx.degree // 2)
    y = t.all_elements
    lhs = t.sub(t.power(t.add(y, 1), d), t.power(y, d))
    return int((lhs == 1).sum())


def _eta5(p, m):
    return jacobi_symbol_power(5, p, m)


def _eta_m15(p, m):
    return jacobi_symbol_power(-15, p, m)


def _exact_div(num, den, what):
    value, rem = divmod(num, den)
    if rem:
        raise IntegralityFailure(f"{what}: {num}/{den} is not an integer")
    return value


def n4_closed(p: int, m: int) -> int:
    """N_4, the number of a with exactly four roots."""
    _require_p5(p)
    require_gcd(p, m)
    q = p ** m
    if p == 5:
        return _exact_div(q - (-1) ** m, 6, "N4")
    num = q - 4 + 3 * _eta5(p, m) + 3 * _eta_m15(p, m) + lambda_closed(p, m)
    return _exact_div(num, 6, "N4")


@dataclass(frozen=True)
class N4Counts:
    X: int
    triangle: int
    H: int

    @property
    def n4(self) -> int:
        return _exact_div(self.X - self.triangle - self.H, 6, "#X''")


def n4_counts_closed(p: int, m: int) -> N4Counts:
    _require_p5(p)
    q = p ** m
    d5 = 1 if p == 5 else 0
    # eta over GF(q) of a prime-field constant is a Jacobi symbol power
    return N4Counts(
        q + 2 + lambda_closed(p, m),
        3 - 3 * _eta_m15(p, m) - 2 * d5,
        3 * (1 - _eta5(p, m) - d5),
    )


def n4_counts_brute(ctx: FieldContext) -> N4Counts:
    """Enumerate (x1, x2, x3) in U^3 with x1 + x2 + x3 + 2 = 0."""
    q = ctx.q
    if q > N4_MAX_Q:
        raise TooLarge(f"q={q} exceeds {N4_MAX_Q}")
    t = ctx.tables
    U = t.unit_circle
    x1, x2 = (g.ravel() for g in np.meshgrid(U, U, indexing="ij"))
    x3 = t.neg(t.add(t.add(x1, x2), 2 % ctx.p))
    on = t.in_unit_circle(x3)
    x1, x2, x3 = x1[on], x2[on], x3[on]
    coincide = (x1 == x2) | (x1 == x3) | (x2 == x3)
    has_one = (x1 == 1) | (x2 == 1) | (x3 == 1)
    return N4Counts(int(on.sum()), int(coincide.sum()), int((~coincide & has_one).sum()))


def n4_intermediate_counts(ctx: FieldContext) -> N4Counts:
    """Closed-form (#X, #triangle, #H), checked against enumeration."""
    p, m = ctx.p, ctx.degree // 2
    closed = n4_counts_closed(p, m)
    brute = n4_counts_brute(ctx)
    if closed != brute:
        raise MismatchError(f"N4 intermediates: closed {closed} != enumeration {brute}")
    return closed


def n5_closed(p: int, m: int) -> int:
    """N_5, the number of a with five roots; cross-checked against B_5/(q+1)."""
    if p < 3:
        raise SmallCharacteristic("N5 closed form needs p >= 3")
    require_gcd(p, m)
    q = p ** m
    s = (-1) ** m
    if p == 3:
        num = q * q - q * (6 + s) + 6
    elif p == 5:
        num = q * q - q * (7 + 4 * s) + 10 * s
    else:
        num = (q * q - q * (6 + 4 * q_over_3(p, m)) + 16 - 20 * _eta5(p, m)
               - 15 * _eta_m15(p, m) - 10 * lambda_closed(p, m) - a_q(p, m))
    n5 = _exact_div(num, 120, "N5")
    via_b5 = Fraction(b5_pure_weight(p, m), q + 1)
    if via_b5 != n5:
        raise MismatchError(f"N5 = {n5} but B5/(q+1) = {via_b5}")
    return n5


# -- distribution -----------------------------------------------------------

def distribution_closed(p: int, m: int) -> DistributionTable:
    _require_p5(p)
    require_gcd(p, m)
    q = p ** m
    b3 = b3_closed(p, m)
    n4 = n4_closed(p, m)
    n5 = n5_closed(p, m)
    F = Fraction
    freqs = [
        F(q * q, 2) - F(q, 3) - F(b3 * q, 6) + n4 + 4 * n5,
        -F(q, 2) + F(b3 * q, 2) - 4 * n4 - 15 * n5 - 1,  # s(0) = -1 is excluded
        F(q * q, 2) + q - F(b3 * q, 2) + 6 * n4 + 20 * n5,
        -F(q, 6) + F(b3 * q, 6) - 4 * n4 - 10 * n5,
        F(n4),
        F(n5),
    ]
    rows = []
    for value, f in zip(correlation_values(q), freqs):
        if f.denominator != 1:
            raise IntegralityFailure(f"frequency of {value} is {f}")
        if f < 0:
            raise NegativeFrequency(f"frequency of {value} is {f}")
        rows.append((value, int(f)))
    table = DistributionTable(tuple(rows), p, m)
    if table.total() != q * q - 1:
        raise MismatchError(f"frequencies sum to {table.total()}, expected {q * q - 1}")
    return table


def distribution_from_root_counts(counts: np.ndarray, p: int, m: int) -> DistributionTable:
    q = p ** m
    hist = np.bincount(counts[1:], minlength=6)  # a = 0 has encoding 0
    rows = tuple((q * (i - 1) - 1, int(hist[i])) for i in range(6))
    return DistributionTable(rows, p, m)


def correlation_by_sums(ctx: FieldContext) -> dict:
    """Histogram of C_d(tau), tau = 0..q^2-2, as rounded complex sums over
    the m-sequence s_t = Tr(g^t)."""
    t = ctx.tables
    p, Q = ctx.p, ctx.order
    d = decimation(p, ctx.degree // 2)
    seq = t.trace(t.exp)
    dec = seq[(d * np.arange(Q - 1)) % (Q - 1)]
    omega = np.exp(2j * np.pi * np.arange(p) / p)
    idx = (np.arange(Q - 1)[:, None] + np.arange(Q - 1)[None, :]) % (Q - 1)
    sums = omega[(seq[idx] - dec[None, :]) % p].sum(axis=1)
    values = np.rint(sums.real).astype(np.int64)
    if np.abs(sums - values).max() > 1e-6:
        raise MismatchError("correlation sums are not integers")
    out = {}
    for v in values:
        out[int(v)] = out.get(int(v), 0) + 1
    return out


def distribution_oracle(ctx: FieldContext, method: str = "incidence") -> DistributionTable:
    """Distribution of s(a) over a in GF(q^2)* from exact root counts."""
    p, m = ctx.p, ctx.degree // 2
    table = distribution_from_root_counts(root_counts(ctx, method), p, m)
    if ctx.q <= COMPLEX_SUM_MAX_Q:
        direct = correlation_by_sums(ctx)
        mine = {v: f for v, f in table.rows if f}
        if direct != mine:
            raise MismatchError(f"root counts give {mine}, complex sums give {direct}")
    return table


def distribution_oracle_for(p: int, m: int, method: str = "incidence") -> DistributionTable:
    require_gcd(p, m)
    return distribution_oracle(build_field_context(p, 2 * m), method)


def lambda_oracle(p: int, m: int) -> int:
    return lambda_direct(build_field_context(p, m))
