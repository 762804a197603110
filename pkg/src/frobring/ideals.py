"""Left ideals, the Jacobson radical, socles, and quotient rings.

Ideals store their full sorted element list; equality and all "least
witness" tie-breaks are lexicographic on that list, which keeps every
computation deterministic.
"""

from array import array

from . import kernels
from .errors import CapExceeded, NotARing
from .rings import FiniteRing

DEFAULT_LATTICE_CAP = 20000


class LeftIdeal:
    """A left ideal (or one-sided submodule of R) as an explicit element set."""

    def __init__(self, ring, elements, generators=(), side="left", finitary=False):
        self.ring = ring
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.side = side
        # at finite scale the finitary socle coincides with the socle;
        # this flag records when a socle was computed in that capacity
        self.finitary = finitary
        self._set = frozenset(self.elements)

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, LeftIdeal) and self.ring is other.ring
                and self.elements == other.elements)

    def __hash__(self):
        return hash((id(self.ring), self.elements))

    def __repr__(self):
        shown = ",".join(self.ring.label(x) for x in self.elements[:6])
        if len(self.elements) > 6:
            shown += ",..."
        return f"<{self.side} ideal {{{shown}}} of {self.ring.name}>"

    def as_set(self):
        return self._set


class TwoSidedIdeal(LeftIdeal):
    def __init__(self, ring, elements, generators=()):
        super().__init__(ring, elements, generators, side="two-sided")


def cyclic_left_ideal(ring, x):
    """Rx; the orbit is already closed under addition."""
    n = ring.order
    elems = sorted({ring.mul_table[r * n + x] for r in range(n)})
    return LeftIdeal(ring, elems, (x,))


def span_left(ring, gens):
    elems = kernels.left_span(ring.add_table, ring.mul_table, ring.order,
                              ring.zero, list(gens))
    return LeftIdeal(ring, elems, tuple(gens))


def span_right(ring, gens):
    opp = ring.opposite()
    elems = kernels.left_span(opp.add_table, opp.mul_table, opp.order,
                              opp.zero, list(gens))
    return LeftIdeal(ring, elems, tuple(gens), side="right")


def additive_span(ring, gens):
    """Subgroup of (R,+) generated by gens, as a sorted tuple."""
    return tuple(kernels.additive_closure(ring.add_table, ring.order,
                                          ring.zero, list(gens)))


def minimal_left_ideals(ring):
    """All minimal nonzero left ideals, sorted by element list.

    Rx is minimal iff Ry = Rx for every nonzero y in Rx.
    """
    cached = ring._cache.get("minimal_left")
    if cached is not None:
        return cached
    seen = {}
    for x in range(ring.order):
        if x == ring.zero:
            continue
        ideal = cyclic_left_ideal(ring, x)
        key = ideal.elements
        if key in seen:
            continue
        minimal = all(cyclic_left_ideal(ring, y).elements == key
                      for y in ideal.elements if y != ring.zero)
        if minimal:
            seen[key] = ideal
    out = [seen[k] for k in sorted(seen)]
    ring._cache["minimal_left"] = out
    return out


def minimal_right_ideals(ring):
    opp = ring.opposite()
    return [LeftIdeal(ring, ideal.elements, ideal.generators, side="right")
            for ideal in minimal_left_ideals(opp)]


def radical(ring):
    """Jacobson radical via quasi-regularity: x in rad iff 1-rx is a unit for all r."""
    cached = ring._cache.get("radical")
    if cached is not None:
        return cached
    n = ring.order
    neg = array("i", [ring.neg(x) for x in range(n)])
    mask = kernels.quasiregular_mask(ring.add_table, ring.mul_table, n,
                                     ring.one, neg, ring.unit_mask())
    elems = [x for x in range(n) if mask[x]]
    ideal = TwoSidedIdeal(ring, elems)
    if not is_left_ideal(ring, ideal.as_set()) or not is_right_ideal(ring, ideal.as_set()):
        raise NotARing(f"radical of {ring.name} is not a two-sided ideal")
    ring._cache["radical"] = ideal
    return ideal


def radical_via_maximal_left_ideals(ring, lattice_cap=DEFAULT_LATTICE_CAP):
    """Debug oracle: intersection of all maximal left ideals."""
    proper = [i for i in all_left_ideals(ring, lattice_cap)
              if len(i) < ring.order]
    maximal = [i for i in proper
               if not any(i is not j and i.as_set() < j.as_set() for j in proper)]
    out = set(range(ring.order))
    for i in maximal:
        out &= i.as_set()
    if not maximal:
        out = {ring.zero} if ring.order == 1 else out
    return tuple(sorted(out))


def socle_left(ring):
    """Sum of all minimal left ideals; equals the finitary socle here."""
    cached = ring._cache.get("socle_left")
    if cached is not None:
        return cached
    seeds = [x for ideal in minimal_left_ideals(ring) for x in ideal.elements]
    elems = additive_span(ring, seeds)
    out = LeftIdeal(ring, elems, finitary=True)
    ring._cache["socle_left"] = out
    return out


def socle_right(ring):
    opp = ring.opposite()
    ideal = socle_left(opp)
    return LeftIdeal(ring, ideal.elements, side="right", finitary=True)


def is_left_ideal(ring, subset):
    n = ring.order
    return all(ring.mul_table[r * n + x] in subset for x in subset for r in range(n)) \
        and _is_subgroup(ring, subset)


def is_right_ideal(ring, subset):
    n = ring.order
    return all(ring.mul_table[x * n + r] in subset for x in subset for r in range(n)) \
        and _is_subgroup(ring, subset)


def _is_subgroup(ring, subset):
    n = ring.order
    return ring.zero in subset and all(
        ring.add_table[x * n + y] in subset for x in subset for y in subset)


def right_annihilator(ring, subset):
    """{x : s*x = 0 for every s in subset}; for subset = rad this is the left socle."""
    return tuple(x for x in range(ring.order)
                 if all(ring.mul(s, x) == ring.zero for s in subset))


def left_annihilator(ring, subset):
    return tuple(x for x in range(ring.order)
                 if all(ring.mul(x, s) == ring.zero for s in subset))


def all_left_ideals(ring, count_cap=DEFAULT_LATTICE_CAP):
    """Every left ideal of the ring (lattice enumeration, deterministic order)."""
    key = ("left_ideals", count_cap)
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    try:
        tuples = kernels.code_lattice(ring.add_table, ring.mul_table, ring.order,
                                      1, ring.zero, ring.order, count_cap)
    except RuntimeError as exc:
        raise CapExceeded(f"left-ideal lattice of {ring.name} exceeds {count_cap}") from exc
    out = [LeftIdeal(ring, t) for t in tuples]
    ring._cache[key] = out
    return out


def quotient_ring(ring, ideal):
    """Coset ring R/J with the canonical projection.

    Returns (quotient, proj) where proj maps each element to its coset
    index; coset representatives are the least element of each coset.
    """
    if not is_right_ideal(ring, ideal.as_set()) or not is_left_ideal(ring, ideal.as_set()):
        raise NotARing("quotient requires a two-sided ideal")
    n = ring.order
    rep = [None] * n
    for x in range(n):
        if rep[x] is None:
            coset = sorted(ring.add(x, j) for j in ideal.elements)
            least = coset[0]
            for y in coset:
                rep[y] = least
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    proj = [index[rep[x]] for x in range(n)]
    m = len(reps)
    add = array("i", [index[rep[ring.add(a, b)]] for a in reps for b in reps])
    mul = array("i", [index[rep[ring.mul(a, b)]] for a in reps for b in reps])
    labels = [ring.label(r) for r in reps]
    quotient = FiniteRing(m, add, mul, index[rep[ring.zero]], index[rep[ring.one]],
                          name=f"{ring.name}/J{len(ideal)}", labels=labels)
    for a in range(n):
        for b in range(n):
            if proj[ring.add(a, b)] != quotient.add(proj[a], proj[b]) or \
               proj[ring.mul(a, b)] != quotient.mul(proj[a], proj[b]):
                raise NotARing("projection is not a ring homomorphism")
    return quotient, proj
