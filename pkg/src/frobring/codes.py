"""Codes over finite rings and the monomial extension of weight-preserving maps.

A code is a left submodule of R^n.  The central question: does every
Hamming-weight-preserving homomorphism between codes extend to a
monomial transformation (coordinate permutation plus unit scaling)?
The constructive extension algorithm works coordinate by coordinate,
matching coordinate kernels and dividing out units; an exhaustive
(sigma, u) search serves as its independent oracle.
"""

from dataclasses import dataclass, field
from itertools import permutations, product as iter_product
from math import factorial

from . import kernels
from .errors import CapExceeded, InternalInconsistency

CODE_SIZE_CAP = 256
HOM_CAP = 10 ** 6
ORACLE_CAP = 10 ** 6
CODE_COUNT_CAP = 20000
VECTOR_CAP = 1 << 20


def encode_vector(ring, vec):
    out = 0
    for x in vec:
        out = out * ring.order + x
    return out


def decode_vector(ring, enc, length):
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        enc, out[pos] = divmod(enc, ring.order)
    return tuple(out)


def zero_vector(ring, length):
    return (ring.zero,) * length


def hamming_weight(ring, vec):
    return sum(1 for x in vec if x != ring.zero)


def vector_add(ring, a, b):
    return tuple(ring.add(x, y) for x, y in zip(a, b))


def scalar_mul(ring, r, a):
    return tuple(ring.mul(r, x) for x in a)


class Code:
    """A left submodule of R^length with its full element list."""

    def __init__(self, ring, length, generators, elements):
        self.ring = ring
        self.length = length
        self.generators = tuple(tuple(g) for g in generators)
        self.elements = tuple(tuple(e) for e in elements)
        self._set = frozenset(self.elements)
        self._greedy = None

    def __contains__(self, vec):
        return tuple(vec) in self._set

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Code) and self.ring is other.ring
                and self.length == other.length and self.elements == other.elements)

    def __hash__(self):
        return hash((id(self.ring), self.length, self.elements))

    def __repr__(self):
        return f"<code of size {len(self.elements)} in {self.ring.name}^{self.length}>"

    def minimal_generators(self):
        """Greedy generating set: repeatedly the least element not yet spanned."""
        if self._greedy is None:
            gens = []
            spanned = {zero_vector(self.ring, self.length)}
            for e in self.elements:
                if e not in spanned:
                    gens.append(e)
                    spanned = set(span_code(self.ring, self.length, gens,
                                            size_cap=len(self.elements)).elements)
            self._greedy = tuple(gens)
        return self._greedy


def span_code(ring, length, gens, size_cap=CODE_SIZE_CAP):
    """Smallest submodule of R^length containing gens."""
    _check_vector_universe(ring, length)
    encoded = kernels.code_span(ring.add_table, ring.mul_table, ring.order,
                                length, ring.zero, [encode_vector(ring, g) for g in gens])
    if len(encoded) > size_cap:
        raise CapExceeded(f"code of size {len(encoded)} exceeds cap {size_cap}")
    elements = [decode_vector(ring, e, length) for e in encoded]
    return Code(ring, length, gens, elements)


def all_codes(ring, length, size_cap=CODE_SIZE_CAP, count_cap=CODE_COUNT_CAP):
    """All submodules of R^length up to size_cap, lexicographically sorted."""
    _check_vector_universe(ring, length)
    try:
        lattice = kernels.code_lattice(ring.add_table, ring.mul_table, ring.order,
                                       length, ring.zero, size_cap, count_cap)
    except RuntimeError as exc:
        raise CapExceeded(f"more than {count_cap} codes in {ring.name}^{length}") from exc
    out = []
    for encoded in lattice:
        elements = [decode_vector(ring, e, length) for e in encoded]
        out.append(Code(ring, length, (), elements))
    return out


def _check_vector_universe(ring, length):
    if ring.order ** length > VECTOR_CAP:
        raise CapExceeded(
            f"vector universe {ring.order}^{length} exceeds {VECTOR_CAP}")


class CodeHom:
    """A left-linear map between codes, stored as a full graph."""

    def __init__(self, domain, codomain, mapping):
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)

    @classmethod
    def from_generator_images(cls, domain, images, codomain=None):
        """Linear extension of generator images, or None if ill-defined."""
        ring, length = domain.ring, domain.length
        gens = domain.minimal_generators()
        if len(images) != len(gens):
            raise ValueError("one image per generator required")
        elems = [encode_vector(ring, e) for e in domain.elements]
        slots = [domain.elements.index(g) for g in gens]
        cands = [[encode_vector(ring, img)] for img in images]
        maps = kernels.linear_maps(ring.add_table, ring.mul_table, ring.order,
                                   length, elems, slots, cands, ring.zero,
                                   False, False)
        if not maps:
            return None
        mapping = {domain.elements[i]: decode_vector(ring, v, length)
                   for i, v in enumerate(maps[0])}
        if codomain is None:
            codomain = _image_code(domain, mapping)
        return cls(domain, codomain, mapping)

    def __call__(self, vec):
        return self.mapping[tuple(vec)]

    def graph(self):
        return tuple(sorted(self.mapping.items()))

    def is_injective(self):
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_weight_preserving(self):
        ring = self.domain.ring
        return all(hamming_weight(ring, y) == hamming_weight(ring, x)
                   for x, y in self.mapping.items())

    def coordinate_map(self, j):
        return {x: y[j] for x, y in self.mapping.items()}


def _image_code(domain, mapping):
    elements = sorted(set(mapping.values()))
    gens = tuple(mapping[g] for g in domain.minimal_generators())
    return Code(domain.ring, domain.length, gens, elements)


def is_weight_preserving(hom):
    return hom.is_weight_preserving()


def coordinate_kernels(hom):
    """ker(phi_j) = {x in M : phi(x)_j = 0} for each codomain coordinate."""
    ring = hom.domain.ring
    out = []
    for j in range(hom.codomain.length):
        out.append(frozenset(x for x, y in hom.mapping.items() if y[j] == ring.zero))
    return out


def kernel_match(phi, psi):
    """Least (j, k) with ker(phi_j) = ker(psi_k), or None."""
    kf = coordinate_kernels(phi)
    kg = coordinate_kernels(psi)
    for j, kj in enumerate(kf):
        for k, kk in enumerate(kg):
            if kj == kk:
                return (j, k)
    return None


def kernel_containment_holds(phi, psi):
    """Whether every ker(psi_k) has some ker contained in it the expected way:
    for each j there is k with ker(psi_k) <= ker(phi_j)."""
    kf = coordinate_kernels(phi)
    kg = coordinate_kernels(psi)
    return all(any(kk <= kj for kk in kg) for kj in kf)


def unit_between(ring, gens, gfun, hfun):
    """Least unit u with h(x) = g(x)*u, or None.

    Checking on a generating set suffices: both sides are left-linear
    in x.
    """
    for u in ring.units():
        if all(hfun(g) == ring.mul(gfun(g), u) for g in gens):
            return u
    return None


class MonomialTransform:
    """x -> (x_{sigma(1)} u_1, ..., x_{sigma(n)} u_n) on R^n."""

    def __init__(self, ring, sigma, units):
        self.ring = ring
        self.sigma = tuple(sigma)
        self.units = tuple(units)
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError("sigma is not a permutation")
        if any(not ring.is_unit(u) for u in self.units):
            raise ValueError("scaling vector contains a non-unit")

    def __repr__(self):
        return f"MonomialTransform(sigma={self.sigma}, units={self.units})"

    def __eq__(self, other):
        return (isinstance(other, MonomialTransform) and self.ring is other.ring
                and self.sigma == other.sigma and self.units == other.units)

    def apply(self, vec):
        return tuple(self.ring.mul(vec[s], u) for s, u in zip(self.sigma, self.units))

    def agrees_with(self, hom):
        return all(self.apply(x) == y for x, y in hom.mapping.items())


def extend_to_monomial(hom):
    """Extend a weight-preserving hom to a monomial transformation.

    Inductive algorithm: treat the hom as psi and the inclusion of its
    domain as phi, find a coordinate pair with equal kernels, divide out
    a unit, delete the matched coordinates and recurse.  Backtracks over
    kernel-matched pairs (in ascending order, so the result is
    deterministic); returns None when no assignment survives.  A found
    transform is verified against the hom element by element.
    """
    if not hom.is_weight_preserving():
        raise ValueError("extension requires a weight-preserving homomorphism")
    ring = hom.domain.ring
    n = hom.domain.length
    if hom.codomain.length != n:
        raise ValueError("domain and codomain live in different R^n")
    gens = hom.domain.minimal_generators()
    incl_kernels = []
    psi_kernels = []
    for j in range(n):
        incl_kernels.append(frozenset(x for x in hom.domain.elements
                                      if x[j] == ring.zero))
        psi_kernels.append(frozenset(x for x, y in hom.mapping.items()
                                     if y[j] == ring.zero))
    assignment = {}

    def recurse(sources, targets):
        if not targets:
            return True
        k = targets[0]
        for j in sources:
            if incl_kernels[j] != psi_kernels[k]:
                continue
            u = unit_between(ring, gens,
                             lambda x, j=j: x[j],
                             lambda x, k=k: hom.mapping[x][k])
            if u is None:
                continue
            assignment[k] = (j, u)
            if recurse([s for s in sources if s != j], targets[1:]):
                return True
            del assignment[k]
        return False

    if not recurse(list(range(n)), list(range(n))):
        return None
    sigma = tuple(assignment[k][0] for k in range(n))
    units = tuple(assignment[k][1] for k in range(n))
    transform = MonomialTransform(ring, sigma, units)
    if not transform.agrees_with(hom):
        raise InternalInconsistency("assembled monomial transform disagrees with hom")
    return transform


def exhaustive_extension_oracle(hom, cap=ORACLE_CAP):
    """Brute-force scan over all (sigma, u); least in (sigma, u) order.

    Independent oracle for the inductive extension; agreement on
    existence is a standing invariant.
    """
    ring = hom.domain.ring
    n = hom.domain.length
    units = ring.units()
    total = factorial(n) * len(units) ** n
    if total > cap:
        raise CapExceeded(f"oracle space {total} exceeds cap {cap}")
    gens = hom.domain.minimal_generators()
    for sigma in permutations(range(n)):
        for us in iter_product(units, repeat=n):
            if all(tuple(ring.mul(g[s], u) for s, u in zip(sigma, us)) == hom.mapping[g]
                   for g in gens):
                return MonomialTransform(ring, sigma, us)
    return None


@dataclass
class MacWilliamsReport:
    ring_name: str
    length: int
    code_size_cap: int
    holds: bool
    counterexample: tuple = None  # (domain elements, image elements, hom graph)
    codes_checked: int = 0
    homs_checked: int = 0
    oracle_runs: int = 0
    notes: tuple = ()


def verify_macwilliams(ring, length, code_size_cap=CODE_SIZE_CAP,
                       hom_cap=HOM_CAP, oracle_cap=ORACLE_CAP,
                       count_cap=CODE_COUNT_CAP):
    """Exhaustively test the extension property at one length.

    Enumerates codes, then all weight-preserving (hence injective)
    homomorphisms out of each by weight-constrained generator images,
    and tests extendability; the least counterexample (code order, then
    hom graph) is reported.  Every instance is cross-checked against the
    exhaustive oracle when it fits in its cap.
    """
    _check_vector_universe(ring, length)
    n = ring.order
    by_weight = {}
    for enc in range(n ** length):
        vec = decode_vector(ring, enc, length)
        by_weight.setdefault(hamming_weight(ring, vec), []).append(enc)
    codes = all_codes(ring, length, code_size_cap, count_cap)
    notes = []
    homs_checked = 0
    oracle_runs = 0
    oracle_space = factorial(length) * len(ring.units()) ** length
    if oracle_space > oracle_cap:
        notes.append(f"oracle skipped: space {oracle_space} exceeds cap {oracle_cap}")
    for code in codes:
        gens = code.minimal_generators()
        slots = [code.elements.index(g) for g in gens]
        cands = []
        total = 1
        for g in gens:
            wclass = by_weight.get(hamming_weight(ring, g), [])
            cands.append(wclass)
            total *= len(wclass)
        if total > hom_cap:
            raise CapExceeded(
                f"hom search space {total} for a code of size {len(code)} "
                f"exceeds cap {hom_cap}")
        elems = [encode_vector(ring, e) for e in code.elements]
        maps = kernels.linear_maps(ring.add_table, ring.mul_table, n, length,
                                   elems, slots, cands, ring.zero, True, True)
        failures = []
        for fmap in maps:
            homs_checked += 1
            mapping = {code.elements[i]: decode_vector(ring, v, length)
                       for i, v in enumerate(fmap)}
            hom = CodeHom(code, _image_code(code, mapping), mapping)
            found = extend_to_monomial(hom)
            if oracle_space <= oracle_cap:
                oracle_runs += 1
                oracle = exhaustive_extension_oracle(hom, oracle_cap)
                if (found is None) != (oracle is None):
                    raise InternalInconsistency(
                        "inductive extension and exhaustive oracle disagree")
            if found is None:
                failures.append(fmap)
        if failures:
            worst = min(failures)
            mapping = {code.elements[i]: decode_vector(ring, v, length)
                       for i, v in enumerate(worst)}
            hom = CodeHom(code, _image_code(code, mapping), mapping)
            return MacWilliamsReport(
                ring_name=ring.name, length=length, code_size_cap=code_size_cap,
                holds=False,
                counterexample=(code.elements, hom.codomain.elements, hom.graph()),
                codes_checked=codes.index(code) + 1, homs_checked=homs_checked,
                oracle_runs=oracle_runs, notes=tuple(notes))
    return MacWilliamsReport(
        ring_name=ring.name, length=length, code_size_cap=code_size_cap,
        holds=True, codes_checked=len(codes), homs_checked=homs_checked,
        oracle_runs=oracle_runs, notes=tuple(notes))


def search_counterexample(ring, max_length, code_size_cap=CODE_SIZE_CAP,
                          hom_cap=HOM_CAP, oracle_cap=ORACLE_CAP):
    """First counterexample over lengths 1..max_length, or None."""
    reports = []
    for length in range(1, max_length + 1):
        report = verify_macwilliams(ring, length, code_size_cap, hom_cap, oracle_cap)
        reports.append(report)
        if not report.holds:
            return report, reports
    return None, reports
