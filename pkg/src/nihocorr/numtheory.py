"""Integer number theory: primality, factoring, Legendre/Jacobi symbols and
two-term integer recurrences."""

from dataclasses import dataclass
import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def prime_power(q: int):
    """Return ``(p, m)`` with ``q == p**m`` or None if q is not a prime power."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p = ps[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p); for p = 2 returns 1 on odd a, 0 on even a."""
    if p == 2:
        return a % 2
    return jacobi(a, p)


def jacobi_symbol_power(base: int, p: int, m: int) -> int:
    """(base/p)**m, i.e. the quadratic character of ``base`` in GF(p^m).

    This is how (5/q), (-15/q) are read when q = p^m.  For the symbol
    (q/3) use ``legendre(p, 3) ** m``.
    """
    return legendre(base, p) ** m


@dataclass(frozen=True)
class QuadraticIntSequence:
    """s_m = lin * s_{m-1} + const * s_{m-2} with the given initial terms.

    With s0 = 2, s1 = lin and const = -(product of roots) this is the power
    sum alpha^m + beta^m of the roots of T^2 - lin*T - const.
    """

    s0: int
    s1: int
    lin: int
    const: int

    @classmethod
    def power_sums(cls, root_sum: int, root_product: int) -> "QuadraticIntSequence":
        return cls(2, root_sum, root_sum, -root_product)


def lucas_sequence_term(seq: QuadraticIntSequence, m: int) -> int:
    if m < 0:
        raise ValueError("index must be nonnegative")
    a, b = seq.s0, seq.s1
    for _ in range(m):
        a, b = b, seq.lin * b + seq.const * a
    return a
