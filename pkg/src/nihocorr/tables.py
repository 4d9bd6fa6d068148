"""Log/antilog tables for vectorized arithmetic on encoded field elements.

All functions take and return int64 numpy arrays of encodings (see
:mod:`.field`).  Inverse follows the convention 1/0 = 0.
"""

import math

import numpy as np

from .errors import EvenCharacteristic, PreconditionError


class FieldTables:
    def __init__(self, ctx):
        self.ctx = ctx
        self.p = p = ctx.p
        self.n = n = ctx.degree
        self.order = Q = ctx.order
        self.pw = np.array([p ** i for i in range(n)], dtype=np.int64)

        # matrix of y -> y*g acting on coordinate row vectors
        def mult_matrix(c):
            return np.array(
                [ctx.decode(ctx._mul(p ** i, c.value)) for i in range(n)], dtype=np.int64
            )

        g = ctx.generator
        block = max(1, math.isqrt(Q - 1) + 1)
        first = []
        x = ctx.one
        for _ in range(min(block, Q - 1)):
            first.append(ctx.decode(x.value))
            x = x * g
        E = np.array(first, dtype=np.int64)
        step = mult_matrix(g ** block)
        chunks = [E]
        done = len(E)
        while done < Q - 1:
            E = (E @ step) % p
            chunks.append(E)
            done += len(E)
        digits = np.concatenate(chunks)[: Q - 1]
        self.exp = digits @ self.pw
        self.log = np.full(Q, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(Q - 1, dtype=np.int64)
        if (self.log[1:] < 0).any():
            raise AssertionError("generator tables do not cover the multiplicative group")

    # -- basic arithmetic ------------------------------------------------

    def digits(self, x):
        x = np.asarray(x, dtype=np.int64)
        return [(x // w) % self.p for w in self.pw]

    def add(self, x, y):
        if self.n == 1:
            return (np.asarray(x) + y) % self.p
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        p = self.p
        for w in self.pw:
            out += ((x // w + y // w) % p) * w
        return out

    def neg(self, x):
        if self.n == 1:
            return -np.asarray(x) % self.p
        x = np.asarray(x, dtype=np.int64)
        out = np.zeros_like(x)
        for w in self.pw:
            out += (-(x // w) % self.p) * w
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.n == 1:
            return x * y % self.p
        lx, ly = self.log[x], self.log[y]
        out = self.exp[(lx + ly) % (self.order - 1)]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def scale(self, x, c: int):
        """Multiply an array by the single encoded constant c."""
        x = np.asarray(x, dtype=np.int64)
        if c == 0:
            return np.zeros_like(x)
        if self.n == 1:
            return x * c % self.p
        lx = self.log[x]
        out = self.exp[(lx + self.log[c]) % (self.order - 1)]
        return np.where(lx < 0, 0, out)

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        lx = self.log[x]
        out = self.exp[(-lx) % (self.order - 1)]
        return np.where(lx < 0, 0, out)

    def power(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        lx = self.log[x]
        out = self.exp[(lx * (e % (self.order - 1))) % (self.order - 1)]
        if e == 0:
            return np.ones_like(x)
        return np.where(lx < 0, 0, out)

    def eta(self, x):
        """Quadratic character with eta(0) = 0."""
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd characteristic")
        lx = self.log[np.asarray(x, dtype=np.int64)]
        return np.where(lx < 0, 0, 1 - 2 * (lx % 2))

    def sqrt(self, x):
        """One square root where it exists, -1 for non-squares, 0 for 0."""
        lx = self.log[np.asarray(x, dtype=np.int64)]
        root = self.exp[np.maximum(lx, 0) // 2]
        return np.where(lx < 0, 0, np.where(lx % 2 == 0, root, -1))

    def const(self, value) -> int:
        """Encoding of an integer constant of the prime subfield."""
        return int(value) % self.p

    # -- structure -------------------------------------------------------

    @property
    def all_elements(self):
        return np.arange(self.order, dtype=np.int64)

    @property
    def nonzero(self):
        return self.exp

    def trace(self, x):
        return self._trace_table[np.asarray(x, dtype=np.int64)]

    @property
    def _trace_table(self):
        t = getattr(self, "_tr", None)
        if t is None:
            from .field import trace_to_prime
            basis = [trace_to_prime(self.ctx.from_index(int(w))) for w in self.pw]
            t = np.zeros(self.order, dtype=np.int64)
            allx = self.all_elements
            for w, tr in zip(self.pw, basis):
                t += ((allx // w) % self.p) * tr
            t %= self.p
            self._tr = t
        return t

    def _q(self):
        if self.n % 2:
            raise PreconditionError("field is not a quadratic extension GF(q^2)")
        return self.p ** (self.n // 2)

    def conj(self, x):
        """x -> x^q in GF(q^2)."""
        return self.power(x, self._q())

    @property
    def unit_circle(self):
        q = self._q()
        return self.exp[(q - 1) * np.arange(q + 1, dtype=np.int64)]

    def in_unit_circle(self, x):
        lx = self.log[np.asarray(x, dtype=np.int64)]
        return (lx >= 0) & (lx % (self._q() - 1) == 0)

    @property
    def subfield(self):
        """Encodings of GF(q) inside GF(q^2): zero followed by powers of g^(q+1)."""
        q = self._q()
        return np.concatenate(
            [[0], self.exp[(q + 1) * np.arange(q - 1, dtype=np.int64)]]
        ).astype(np.int64)
