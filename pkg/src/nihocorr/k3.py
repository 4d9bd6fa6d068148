"""The point-count coefficient A_q of the K3 surface

    X: x1 + ... + x5 = 0,  e4(x1, ..., x5) = 0   in P^4,

blown up at its ten nodes (the S5-orbit of (1:-1:0:0:0)).  A_p is obtained
either from a binary quadratic form representing p or as a coefficient of a
weight-3 eta-product times a theta series; A_q for q = p^m is then a power
sum of the reciprocal roots of 1 - A_p t + (p/15) p^2 t^2.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .errors import AmbiguousRepresentation, BadCharacteristic, TooLarge
from .field import FieldContext
from .numtheory import QuadraticIntSequence, jacobi, legendre, lucas_sequence_term

FORM_A = "A"  # a^2 + ab + 4b^2
FORM_B = "B"  # 2a^2 + ab + 2b^2

SURFACE_MAX_Q = 400


@dataclass(frozen=True)
class QuadFormRep:
    a: int
    b: int
    form: str
    p: int

    def __post_init__(self):
        if self.value() != self.p:
            raise ValueError(f"form {self.form} at ({self.a}, {self.b}) is not {self.p}")

    def value(self) -> int:
        a, b = self.a, self.b
        if self.form == FORM_A:
            return a * a + a * b + 4 * b * b
        return 2 * a * a + a * b + 2 * b * b

    def coefficient(self) -> int:
        a, b = self.a, self.b
        if self.form == FORM_A:
            return 2 * a * a - 7 * b * b + 2 * a * b
        return a * a + 8 * a * b + b * b


@dataclass(frozen=True)
class SurfaceCount:
    q: int
    NX: int
    NXtilde: int

    def __post_init__(self):
        if self.NXtilde - self.NX != 10 * self.q:
            raise ValueError("blow-up adds exactly 10q points")


def _check_char(p):
    if p in (3, 5):
        raise BadCharacteristic("A_p is defined by this route only for p != 3, 5")


def representations(p: int, form: str) -> list[QuadFormRep]:
    bound = math.isqrt(p) + 2
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            v = (a * a + a * b + 4 * b * b) if form == FORM_A else (2 * a * a + a * b + 2 * b * b)
            if v == p:
                out.append(QuadFormRep(a, b, form, p))
    return out


def a_p_coefficient(p: int) -> int:
    _check_char(p)
    if jacobi(p, 15) == -1:
        return 0
    form = FORM_A if p % 15 in (1, 4) else FORM_B
    reps = representations(p, form)
    if not reps:
        raise AssertionError(f"{p} has no representation by form {form}")
    values = {r.coefficient() for r in reps}
    if len(values) > 1:
        raise AmbiguousRepresentation(f"representations of {p} give {sorted(values)}")
    return values.pop()


def theta_series(n: int) -> list[int]:
    """Coefficients of sum_{m,k} z^(m^2 + mk + 4k^2) up to degree n."""
    out = [0] * (n + 1)
    bound = math.isqrt(n) + 2
    for m in range(-bound, bound + 1):
        for k in range(-bound, bound + 1):
            e = m * m + m * k + 4 * k * k
            if e <= n:
                out[e] += 1
    return out


def eta_product_series(n: int) -> list[int]:
    """prod_{r>=1} (1-z^r)(1-z^3r)(1-z^5r)(1-z^15r), truncated at degree n."""
    out = [0] * (n + 1)
    out[0] = 1
    for s in (1, 3, 5, 15):
        for r in range(1, n // s + 1):
            k = s * r
            for i in range(n, k - 1, -1):
                out[i] -= out[i - k]
    return out


def series_mul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def a_p_modular_form(p: int) -> int:
    """Coefficient of z^p in theta(z) * z * eta-product(z)."""
    _check_char(p)
    n = p - 1
    return series_mul(theta_series(n), eta_product_series(n), n)[n]


def a_q(p: int, m: int) -> int:
    if p == 3:
        return (-1) ** m * 3 ** m
    if p == 5:
        return 5 ** m
    ap = a_p_coefficient(p)
    seq = QuadraticIntSequence.power_sums(ap, jacobi(p, 15) * p * p)
    return lucas_sequence_term(seq, m)


def q_over_3(p: int, m: int) -> int:
    """Jacobi symbol (q/3) for q = p^m."""
    return legendre(p, 3) ** m


def surface_count_closed(p: int, m: int) -> int:
    """N_q of the blown-up surface: 1 + q^2 + q(16 + 4(q/3)) + A_q."""
    q = p ** m
    return 1 + q * q + q * (16 + 4 * q_over_3(p, m)) + a_q(p, m)


def _e4(t, xs):
    # sum over i of the product of all x_j with j != i, via prefix/suffix products
    k = len(xs)
    prefix = [None] * (k + 1)
    suffix = [None] * (k + 1)
    one = np.ones_like(xs[0])
    prefix[0] = one
    suffix[k] = one
    for i in range(k):
        prefix[i + 1] = t.mul(prefix[i], xs[i])
    for i in range(k - 1, -1, -1):
        suffix[i] = t.mul(suffix[i + 1], xs[i])
    total = np.zeros_like(xs[0])
    for i in range(k):
        total = t.add(total, t.mul(prefix[i], suffix[i + 1]))
    return total


@lru_cache(maxsize=None)
def _surface_enumeration(ctx: FieldContext):
    """(#X, #(X with some coordinate zero)) by enumerating projective points.

    Points of X correspond to (x1:x2:x3:x4) in P^3 with x5 = -(x1+..+x4);
    each is visited once, normalized so its first nonzero coordinate is 1.
    """
    t = ctx.tables
    q = ctx.order
    elems = t.all_elements
    A, B = np.meshgrid(elems, elems, indexing="ij")
    A, B = A.ravel(), B.ravel()
    nx = nh = 0

    def block(x1, x2, x3, x4):
        nonlocal nx, nh
        x1, x2, x3, x4 = np.broadcast_arrays(x1, x2, x3, x4)
        x5 = t.neg(t.add(t.add(x1, x2), t.add(x3, x4)))
        on = _e4(t, [x1, x2, x3, x4, x5]) == 0
        zero = (x1 == 0) | (x2 == 0) | (x3 == 0) | (x4 == 0) | (x5 == 0)
        nx += int(on.sum())
        nh += int((on & zero).sum())

    for x2 in range(q):
        block(np.int64(1), np.int64(x2), A, B)
    block(np.int64(0), np.int64(1), A, B)
    block(np.int64(0), np.int64(0), np.int64(1), elems)
    block(np.int64(0), np.int64(0), np.int64(0), np.array([1]))
    return nx, nh


def count_surface_points(ctx: FieldContext) -> SurfaceCount:
    q = ctx.order
    if q > SURFACE_MAX_Q:
        raise TooLarge(f"surface count is O(q^3); q={q} exceeds {SURFACE_MAX_Q}")
    nx, _ = _surface_enumeration(ctx)
    return SurfaceCount(q, nx, nx + 10 * q)


def count_coordinate_section(ctx: FieldContext) -> int:
    """Points of X with at least one coordinate zero (expected 10q - 10)."""
    if ctx.order > SURFACE_MAX_Q:
        raise TooLarge(f"q={ctx.order} exceeds {SURFACE_MAX_Q}")
    return _surface_enumeration(ctx)[1]
