"""Exact arithmetic in GF(p^n) with a polynomial basis.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of x^i of the polynomial representative; ``FieldElement.coords``
gives the coefficient vector.  Scalar arithmetic here is plain polynomial
arithmetic modulo the context's irreducible polynomial.  The vectorized
log/antilog engine used by the counting oracles lives in :mod:`.tables`.

GF(q^2) is a single degree-2m extension of GF(p), not a tower; GF(q) sits
inside it as the fixed field of x -> x^q (see :func:`subfield_embedding`).
"""

from dataclasses import dataclass
from functools import cached_property
import itertools

import numpy as np

from .errors import EvenCharacteristic, NonPrime, PreconditionError
from .numtheory import is_prime, prime_factors


# -- polynomials over GF(p), coefficient lists low degree first ------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim(a[:df] if len(a) > df else a)


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base, e, f, p):
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Rabin-style test: f has no factor of degree <= deg(f)/2."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for r in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = _poly_powmod(xp, p, f, p)
        if len(_poly_gcd(f, _poly_sub(xp, x, p), p)) > 1:
            return False
    return True


def irreducible_polynomials(p: int, n: int):
    """Monic irreducible polynomials of degree n in lexicographic order,
    comparing the constant coefficient first."""
    for low in itertools.product(range(p), repeat=n):
        if n > 1 and low[0] == 0:
            continue  # divisible by x
        f = list(low) + [1]
        if is_irreducible(f, p):
            yield tuple(f)


# -- field context and elements ------------------------------------------

class FieldContext:
    """GF(p^degree) with a fixed modulus and primitive element."""

    def __init__(self, p: int, degree: int, modulus=None, generator=None):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if degree < 1:
            raise PreconditionError("extension degree must be at least 1")
        self.p = p
        self.degree = degree
        self.order = p ** degree
        if modulus is None:
            modulus = next(irreducible_polynomials(p, degree))
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise PreconditionError(f"modulus must be monic of degree {degree}")
        if not is_irreducible(modulus, p):
            raise PreconditionError(f"{modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._group_primes = prime_factors(self.order - 1)
        if generator is None:
            generator = self._find_generator()
        else:
            generator = self(generator)
            if not self.is_primitive(generator):
                raise PreconditionError(f"{generator} is not primitive")
        self.generator = generator

    def __repr__(self):
        return f"FieldContext(p={self.p}, degree={self.degree}, modulus={self.modulus})"

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-subfield constant), coordinate sequence or element."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise PreconditionError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        coords = list(value)
        if len(coords) > self.degree:
            raise PreconditionError("too many coordinates")
        return FieldElement(self, self.encode(coords))

    def encode(self, coords) -> int:
        v = 0
        for c in reversed(list(coords)):
            v = v * self.p + (c % self.p)
        return v

    def decode(self, value: int) -> tuple:
        out = []
        for _ in range(self.degree):
            value, c = divmod(value, self.p)
            out.append(c)
        return tuple(out)

    def from_index(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise PreconditionError("encoded value out of range")
        return FieldElement(self, value)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    @property
    def is_quadratic_extension(self) -> bool:
        return self.degree % 2 == 0

    @property
    def q(self) -> int:
        """For a context of even degree 2m this is q = p^m."""
        if self.degree % 2:
            raise PreconditionError("field is not a quadratic extension GF(q^2)")
        return self.p ** (self.degree // 2)

    def is_primitive(self, g: "FieldElement") -> bool:
        if not g:
            return False
        n = self.order - 1
        if g ** n != self.one:
            return False
        return all(g ** (n // ell) != self.one for ell in self._group_primes)

    def _find_generator(self):
        for v in range(1, self.order):
            g = FieldElement(self, v)
            if self.is_primitive(g):
                return g
        raise AssertionError("no primitive element found")  # unreachable for a field

    # polynomial arithmetic on encoded values
    def _mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return a * b % self.p
        pa = _trim(list(self.decode(a)))
        pb = _trim(list(self.decode(b)))
        return self.encode(_poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p))

    def _add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.p
        return self.encode(x + y for x, y in zip(self.decode(a), self.decode(b)))

    def _neg(self, a: int) -> int:
        if self.degree == 1:
            return -a % self.p
        return self.encode(-x for x in self.decode(a))

    @cached_property
    def tables(self):
        """Vectorized log/antilog tables (built on first use)."""
        from .tables import FieldTables
        return FieldTables(self)


def build_field_context(p: int, m: int, modulus=None) -> FieldContext:
    """GF(p^m) with the lexicographically smallest monic irreducible modulus
    (unless one is given) and the smallest primitive element."""
    return _cached_context(p, m, tuple(modulus) if modulus is not None else None)


_CONTEXT_CACHE = {}


def _cached_context(p, m, modulus):
    key = (p, m, modulus)
    ctx = _CONTEXT_CACHE.get(key)
    if ctx is None:
        ctx = FieldContext(p, m, modulus)
        _CONTEXT_CACHE[key] = ctx
    return ctx


class FieldElement:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coords(self) -> tuple:
        return self.ctx.decode(self.value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise PreconditionError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx._add(self.value, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.value))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx._add(self.value, self.ctx._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx._mul(self.value, o))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = 1
        base = self.value
        while e:
            if e & 1:
                result = self.ctx._mul(result, base)
            base = self.ctx._mul(base, base)
            e >>= 1
        return FieldElement(self.ctx, result)

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElement(self.ctx, o).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.coords}, GF({self.ctx.p}^{self.ctx.degree}))"


@dataclass(frozen=True)
class UnitCircleElement:
    """An element x of GF(q^2) with x^(q+1) = 1."""

    value: FieldElement

    def __post_init__(self):
        q = self.value.ctx.q
        if self.value ** (q + 1) != self.value.ctx.one:
            raise PreconditionError(f"{self.value} is not on the unit circle")

    def conjugate(self) -> "UnitCircleElement":
        return UnitCircleElement(frobenius_q(self.value, self.value.ctx.q))


def trace_to_prime(x: FieldElement) -> int:
    """Absolute trace sum_{i<n} x^(p^i), returned as a residue mod p."""
    ctx = x.ctx
    total = ctx.zero
    y = x
    for _ in range(ctx.degree):
        total = total + y
        y = y ** ctx.p
    if any(total.coords[1:]):
        raise AssertionError("trace landed outside the prime field")
    return total.coords[0]


def frobenius_q(x: FieldElement, q: int) -> FieldElement:
    return x ** q


def quadratic_character(x: FieldElement) -> int:
    ctx = x.ctx
    if ctx.p == 2:
        raise EvenCharacteristic("quadratic character needs odd characteristic")
    if not x:
        return 0
    r = x ** ((ctx.order - 1) // 2)
    if r == ctx.one:
        return 1
    if r == -ctx.one:
        return -1
    raise AssertionError("Euler criterion produced neither 1 nor -1")


def unit_circle(ctx: FieldContext) -> list[UnitCircleElement]:
    """U_{q+1} listed as successive powers of g^(q-1)."""
    q = ctx.q
    u = ctx.generator ** (q - 1)
    out = []
    x = ctx.one
    for _ in range(q + 1):
        out.append(UnitCircleElement(x))
        x = x * u
    return out


def subfield_embedding(big: FieldContext, small: FieldContext):
    """Embed GF(q) = ``small`` into GF(q^2) = ``big``.

    The image of the polynomial variable of ``small`` is the smallest-index
    root of small's modulus inside the fixed field of Frobenius.  Returns a
    function mapping elements of ``small`` to elements of ``big``.
    """
    if big.p != small.p or big.degree != 2 * small.degree:
        raise PreconditionError("fields are not GF(q) and GF(q^2) for the same q")
    q = small.order
    step = big.generator ** (q + 1)  # generates GF(q)* inside GF(q^2)
    root = None
    if small.degree == 1:
        root = big.zero  # x is not used: elements are constants
    else:
        y = big.one
        for _ in range(q - 1):
            acc = big.zero
            for c in reversed(small.modulus):
                acc = acc * y + c
            if not acc:
                root = y
                break
            y = y * step
        if root is None:
            raise AssertionError("modulus has no root in the subfield")

    def embed(a: FieldElement) -> FieldElement:
        acc = big.zero
        for c in reversed(a.coords):
            acc = acc * root + c
        return acc

    return embed


def embedding_table(big: FieldContext, small: FieldContext):
    """Array mapping each encoding of GF(q) to its encoding in GF(q^2)."""
    embed = subfield_embedding(big, small)
    tb, ts = big.tables, small.tables
    image = embed(small.generator).value
    step = int(tb.log[image])
    out = np.zeros(small.order, dtype=np.int64)
    out[ts.exp] = tb.exp[(np.arange(small.order - 1, dtype=np.int64) * step) % (big.order - 1)]
    return out


def restriction_table(big: FieldContext, small: FieldContext):
    """Inverse of :func:`embedding_table`; -1 outside the subfield."""
    emb = embedding_table(big, small)
    out = np.full(big.order, -1, dtype=np.int64)
    out[emb] = np.arange(small.order, dtype=np.int64)
    return out
