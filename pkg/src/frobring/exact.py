"""Exact arithmetic: Q/Z values, cyclotomic polynomials, root-of-unity sums.

Nothing in this module (or in any code path that consumes it) touches
floating point; character identities are decided by integer arithmetic
and reduction modulo cyclotomic polynomials.
"""

from functools import lru_cache
from math import gcd


class QZ:
    """An element of Q/Z in canonical form 0 <= num < den, gcd(num, den) = 1.

    >>> QZ(5, 4) + QZ(3, 4)
    QZ(0, 1)
    >>> 3 * QZ(1, 6)
    QZ(1, 2)
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        num %= den
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, *_):
        raise AttributeError("QZ values are immutable")

    def __repr__(self):
        return f"QZ({self.num}, {self.den})"

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __eq__(self, other):
        return isinstance(other, QZ) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return QZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return QZ(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return QZ(self.num * k, self.den)

    __rmul__ = __mul__

    def is_zero(self):
        return self.num == 0

    def order(self):
        """Additive order in Q/Z (1 for the zero class)."""
        return self.den

    def scaled(self, n):
        """self as an integer multiple of 1/n; raises if n is not a multiple of den."""
        if n % self.den:
            raise ValueError(f"{self} is not a multiple of 1/{n}")
        return self.num * (n // self.den)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def poly_mod(a, b):
    """Remainder of a modulo the monic integer polynomial b (exact)."""
    assert b and b[-1] == 1
    a = list(a)
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    while len(a) - 1 >= db:
        q = a[-1]
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        while a and not a[-1]:
            a.pop()
    return tuple(a)


def poly_divide_exact(a, b):
    """Quotient a // b for monic b, asserting zero remainder."""
    assert b and b[-1] == 1
    a = list(a)
    db = len(b) - 1
    quot = [0] * (max(len(a) - db, 0))
    while len(a) - 1 >= db:
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1]
        shift = len(a) - 1 - db
        quot[shift] = q
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
    while a and not a[-1]:
        a.pop()
    assert not a, "division was not exact"
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by exact division of x^n - 1 by the product of the lower
    cyclotomic polynomials phi_d for proper divisors d of n.

    >>> cyclotomic(1)
    (-1, 1)
    >>> cyclotomic(4)
    (1, 0, 1)
    >>> cyclotomic(6)
    (1, -1, 1)
    """
    if n == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = poly_divide_exact(num, cyclotomic(d))
    return num


class RootSum:
    """An exact integer combination sum_j counts[j] * zeta_order^j.

    Zero-testing reduces the coefficient vector modulo the order-th
    cyclotomic polynomial; the reduced coefficients express the value in
    the integral basis 1, zeta, ..., zeta^(phi-1), so the value is a
    rational integer exactly when the reduction is constant.
    """

    __slots__ = ("order", "counts")

    def __init__(self, order, counts):
        counts = tuple(counts)
        if len(counts) != order:
            raise ValueError("need one multiplicity per power of the root")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "counts", counts)

    def __setattr__(self, *_):
        raise AttributeError("RootSum values are immutable")

    def __repr__(self):
        return f"RootSum({self.order}, {self.counts})"

    def __eq__(self, other):
        return (isinstance(other, RootSum) and self.order == other.order
                and self.counts == other.counts)

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError("mismatched root orders")
        return RootSum(self.order, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def scale(self, k):
        return RootSum(self.order, tuple(k * c for c in self.counts))

    def reduced(self):
        return poly_mod(self.counts, cyclotomic(self.order))

    def is_zero(self):
        return not self.reduced()

    def constant_value(self):
        """The value as a plain integer, or None when it is irrational."""
        red = self.reduced()
        if not red:
            return 0
        if len(red) == 1:
            return red[0]
        return None
