"""Explicit finite unital rings as Cayley tables.

Elements are the indices 0..n-1; addition and multiplication are flat
row-major tables.  Rings are immutable after construction and cache
derived data (negation, units, the opposite ring).
"""

from array import array
from random import Random

from . import kernels
from .errors import NotARing

_LAW_MESSAGES = {
    1: "addition is not commutative",
    2: "addition is not associative",
    3: "zero is not an additive identity",
    4: "some element has no additive inverse",
    5: "multiplication is not associative",
    6: "one is not a multiplicative identity",
    7: "left distributivity fails",
    8: "right distributivity fails",
    9: "zero does not annihilate",
}

# above this order the O(n^3) laws are spot-checked on sampled triples
EXHAUSTIVE_CHECK_LIMIT = 256
_SAMPLED_TRIPLES = 20000


class FiniteRing:
    """A finite unital ring given by explicit addition/multiplication tables."""

    def __init__(self, order, add_table, mul_table, zero, one,
                 name="", labels=None, expr=None, check=True):
        self.order = order
        self.add_table = add_table if isinstance(add_table, array) else array("i", add_table)
        self.mul_table = mul_table if isinstance(mul_table, array) else array("i", mul_table)
        self.zero = zero
        self.one = one
        self.name = name or f"ring{order}"
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(order))
        self.expr = expr
        self._neg = None
        self._unit_mask = None
        self._opposite = None
        self._cache = {}
        if check:
            verify_ring_laws(self)

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    @property
    def elements(self):
        return range(self.order)

    def add(self, x, y):
        return self.add_table[x * self.order + y]

    def mul(self, x, y):
        return self.mul_table[x * self.order + y]

    def neg(self, x):
        if self._neg is None:
            n = self.order
            neg = array("i", bytes(4 * n))
            for a in range(n):
                row = a * n
                for b in range(n):
                    if self.add_table[row + b] == self.zero:
                        neg[a] = b
                        break
            self._neg = neg
        return self._neg[x]

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def power(self, x, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def additive_order(self, x):
        k, acc = 1, x
        while acc != self.zero:
            acc = self.add(acc, x)
            k += 1
        return k

    def unit_mask(self):
        if self._unit_mask is None:
            self._unit_mask = kernels.unit_mask(self.mul_table, self.order, self.one)
        return self._unit_mask

    def units(self):
        """Sorted tuple of the two-sided invertible elements."""
        mask = self.unit_mask()
        return tuple(u for u in range(self.order) if mask[u])

    def is_unit(self, x):
        return bool(self.unit_mask()[x])

    def inverse(self, u):
        for v in range(self.order):
            if self.mul(u, v) == self.one and self.mul(v, u) == self.one:
                return v
        raise ValueError(f"{self.label(u)} is not a unit")

    def label(self, x):
        return self.labels[x]

    def opposite(self):
        """The opposite ring (multiplication reversed), sharing element indices."""
        if self._opposite is None:
            n = self.order
            mul_op = array("i", bytes(4 * n * n))
            for x in range(n):
                for y in range(n):
                    mul_op[x * n + y] = self.mul_table[y * n + x]
            opp = FiniteRing(n, self.add_table, mul_op, self.zero, self.one,
                             name=self.name + "^op", labels=self.labels,
                             check=False)
            opp._opposite = self
            self._opposite = opp
        return self._opposite


def verify_ring_laws(ring):
    """Raise NotARing unless the tables satisfy all unital-ring axioms.

    Exhaustive up to EXHAUSTIVE_CHECK_LIMIT, deterministic triple sampling
    above it.
    """
    n = ring.order
    triples = None
    if n > EXHAUSTIVE_CHECK_LIMIT:
        rng = Random(0)
        triples = [rng.randrange(n) for _ in range(3 * _SAMPLED_TRIPLES)]
    code = kernels.ring_law_violation(ring.add_table, ring.mul_table, n,
                                      ring.zero, ring.one, triples)
    if code:
        raise NotARing(f"{ring.name}: {_LAW_MESSAGES[code]}")


def ring_to_text(ring):
    """Canonical text form: header, add table rows, mul table rows."""
    n = ring.order
    lines = [f"ring {ring.name} order {n}"]
    for x in range(n):
        lines.append(" ".join(str(ring.add_table[x * n + y]) for y in range(n)))
    for x in range(n):
        lines.append(" ".join(str(ring.mul_table[x * n + y]) for y in range(n)))
    return "\n".join(lines) + "\n"


def ring_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0]
    if not header.startswith("ring ") or " order " not in header:
        raise ValueError("bad ring header")
    name, order_s = header[5:].rsplit(" order ", 1)
    n = int(order_s)
    if len(lines) != 1 + 2 * n:
        raise ValueError(f"expected {2 * n} table rows, got {len(lines) - 1}")
    rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    add = array("i", [v for row in rows[:n] for v in row])
    mul = array("i", [v for row in rows[n:] for v in row])
    zero = one = None
    for e in range(n):
        if all(add[e * n + x] == x for x in range(n)):
            zero = e
        if all(mul[e * n + x] == x == mul[x * n + e] for x in range(n)):
            one = e
    if zero is None or one is None:
        raise NotARing("tables have no additive or multiplicative identity")
    return FiniteRing(n, add, mul, zero, one, name=name)
