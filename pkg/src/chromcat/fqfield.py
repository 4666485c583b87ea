"""Arithmetic in small finite fields F_q, q = p^m.

Elements are coefficient tuples of length m against the power basis
1, w, ..., w^(m-1), reduced by a fixed published (Conway) irreducible
polynomial per (p, m), so representatives are stable across runs.
"""

from __future__ import annotations

import itertools

# x^m + tail[m-1] x^(m-1) + ... + tail[0]; all are Conway polynomials.
_CONWAY_TAILS = {
    (2, 1): (1,),
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (3, 1): (1,),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (5, 1): (3,),
    (5, 2): (2, 4),
    (7, 1): (4,),
}


class FqError(ValueError):
    pass


def q_to_pm(q: int, p: int) -> int:
    """The exponent m with q = p^m, or raise."""
    m = 0
    n = q
    while n > 1:
        if n % p:
            raise FqError("%d is not a power of %d" % (q, p))
        n //= p
        m += 1
    if m == 0:
        raise FqError("field size must be at least p")
    return m


class GF:
    """The field with p^m elements."""

    def __init__(self, p: int, m: int):
        if (p, m) not in _CONWAY_TAILS:
            raise FqError("no irreducible polynomial on file for (%d, %d)" % (p, m))
        self.p = p
        self.m = m
        self.q = p ** m
        self.tail = _CONWAY_TAILS[(p, m)]
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)
        self.elements = tuple(itertools.product(range(p), repeat=m))

    @classmethod
    def of_size(cls, q: int, p: int) -> "GF":
        return cls(p, q_to_pm(q, p))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % self.p for x in a)

    def scalar(self, c: int, a: tuple) -> tuple:
        return tuple((c * x) % self.p for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        m, p = self.m, self.p
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                for i, t in enumerate(self.tail):
                    prod[k - m + i] -= c * t
            prod[k] = 0
        return tuple(x % p for x in prod[:m])

    def power(self, a: tuple, k: int) -> tuple:
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inverse(self, a: tuple) -> tuple:
        if a == self.zero:
            raise FqError("zero has no inverse")
        return self.power(a, self.q - 2)
