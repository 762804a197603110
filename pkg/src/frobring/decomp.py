"""Principal decomposition and the Frobenius-type classification verdicts.

A ring decomposes as a direct sum of indecomposable projectives R*e_i
along a complete orthogonal set of primitive idempotents.  Comparing the
multiplicities mu_i of the indecomposables with the multiplicities nu_i
of the simple classes inside the left socle yields the classification:

  semisimple        rad R = 0
  quasi-Frobenius   a permutation pi matches socles of projectives to tops
  socle embeds      nu_i <= mu_i for every class
  Frobenius         quasi-Frobenius with nu_i = mu_i for every class
"""

from dataclasses import dataclass

from .errors import InternalInconsistency, NotPrimitive
from .ideals import cyclic_left_ideal, minimal_left_ideals, radical, additive_span
from .modules import (FiniteModule, module_from_subset, quotient_module,
                      simple_modules_isomorphic)


@dataclass(frozen=True)
class PrincipalDecomposition:
    idempotents: tuple      # complete orthogonal primitive set, ascending
    basic: tuple            # least representative per isomorphism class
    iso_class: tuple        # iso_class[i] = basic-class index of idempotents[i]
    multiplicities: tuple   # mu per basic class

    @property
    def num_classes(self):
        return len(self.basic)


@dataclass(frozen=True)
class SocleProfile:
    nu: tuple               # simple-class multiplicities inside the socle
    peels: tuple            # ((ideal elements, class index), ...) in peel order
    socle_size: int


@dataclass(frozen=True)
class Classification:
    ring_name: str
    order: int
    semisimple: bool
    quasi_frobenius: bool
    nakayama: tuple         # () allowed; None when absent
    frobenius: bool
    socle_embeds_left: bool
    socle_embeds_right: bool
    mu: tuple
    nu: tuple
    mu_right: tuple
    nu_right: tuple
    decomposition: PrincipalDecomposition
    profile: SocleProfile


def idempotents(ring):
    return [e for e in range(ring.order) if ring.mul(e, e) == e]


def corner(ring, e):
    """The corner set e*R*e (a subring with identity e when e is idempotent)."""
    return sorted({ring.mul(e, ring.mul(r, e)) for r in range(ring.order)})


def _least_corner_split(ring, e):
    # least idempotent f of e*R*e outside {0, e}; None certifies primitivity
    for c in corner(ring, e):
        if c not in (ring.zero, e) and ring.mul(c, c) == c:
            return c
    return None


def principal_decomposition(ring):
    """Complete orthogonal set of primitive idempotents with iso classes.

    Splits 1 recursively, always at the least nontrivial corner idempotent,
    so the result is deterministic.
    """
    cached = ring._cache.get("decomposition")
    if cached is not None:
        return cached
    final = []
    if ring.one != ring.zero:
        stack = [ring.one]
        while stack:
            e = stack.pop()
            f = _least_corner_split(ring, e)
            if f is None:
                final.append(e)
            else:
                stack.append(f)
                stack.append(ring.sub(e, f))
    final.sort()
    _check_orthogonal_complete(ring, final)
    basic = []
    classes = []
    for e in final:
        for j, b in enumerate(basic):
            if indecomposables_isomorphic(ring, e, b):
                classes.append(j)
                break
        else:
            classes.append(len(basic))
            basic.append(e)
    mu = tuple(classes.count(j) for j in range(len(basic)))
    dec = PrincipalDecomposition(tuple(final), tuple(basic), tuple(classes), mu)
    ring._cache["decomposition"] = dec
    return dec


def _check_orthogonal_complete(ring, es):
    total = ring.zero
    for i, e in enumerate(es):
        if ring.mul(e, e) != e:
            raise InternalInconsistency("decomposition produced a non-idempotent")
        for j, f in enumerate(es):
            if i != j and ring.mul(e, f) != ring.zero:
                raise InternalInconsistency("decomposition idempotents not orthogonal")
        total = ring.add(total, e)
    if total != ring.one:
        raise InternalInconsistency("decomposition idempotents do not sum to 1")


def indecomposables_isomorphic(ring, e, f):
    """Re and Rf are isomorphic iff some a in eRf, b in fRe give ab=e, ba=f."""
    return _iso_witness(ring, e, f) is not None


def _iso_witness(ring, e, f):
    eRf = sorted({ring.mul(e, ring.mul(r, f)) for r in range(ring.order)})
    fRe = sorted({ring.mul(f, ring.mul(r, e)) for r in range(ring.order)})
    for a in eRf:
        for b in fRe:
            if ring.mul(a, b) == e and ring.mul(b, a) == f:
                return a, b
    return None


def is_primitive(ring, e):
    return ring.mul(e, e) == e and e != ring.zero and _least_corner_split(ring, e) is None


def simple_top(ring, e):
    """The simple module Re / rad*Re for a primitive idempotent e."""
    if not is_primitive(ring, e):
        raise NotPrimitive(f"{ring.label(e)} is not a primitive idempotent")
    re = cyclic_left_ideal(ring, e).elements
    rad = radical(ring)
    products = [ring.mul(z, w) for z in rad.elements for w in re]
    rad_re = additive_span(ring, products)
    top = quotient_module(ring, re, rad_re)
    if not top.is_simple():
        raise InternalInconsistency("top of an indecomposable projective is not simple")
    return top


def projective_module(ring, e):
    return module_from_subset(ring, cyclic_left_ideal(ring, e).elements)


def socle_of_projective(ring, e):
    """Minimal left ideals contained in Re; these are the minimal submodules."""
    re = set(cyclic_left_ideal(ring, e).elements)
    return [ideal for ideal in minimal_left_ideals(ring)
            if set(ideal.elements) <= re]


def socle_profile(ring, dec):
    """Greedy decomposition of the left socle into simple classes.

    Peels minimal ideals in lexicographic order, classifying each peeled
    summand against the simple tops of the basic idempotents.
    """
    tops = [simple_top(ring, e) for e in dec.basic]
    nu = [0] * len(dec.basic)
    peels = []
    current = {ring.zero}
    for ideal in minimal_left_ideals(ring):
        if set(ideal.elements) <= current:
            continue
        as_module = module_from_subset(ring, ideal.elements)
        for j, top in enumerate(tops):
            if simple_modules_isomorphic(as_module, top):
                nu[j] += 1
                peels.append((ideal.elements, j))
                break
        else:
            raise InternalInconsistency("minimal ideal matches no simple top")
        current = set(additive_span(ring, tuple(current) + ideal.elements))
    expected = 1
    for elements, _ in peels:
        expected *= len(elements)
    if expected != len(current):
        raise InternalInconsistency("socle peel sizes do not multiply to the socle order")
    return SocleProfile(tuple(nu), tuple(peels), len(current))


def nakayama_permutation(ring, dec):
    """Permutation pi with soc(Re_i) = tp(Re_pi(i)) and soc(e_pi(i)R) = tp(e_i R).

    Present exactly when the ring is quasi-Frobenius.  The simple tops of
    distinct basic classes are non-isomorphic, so the left condition pins
    pi(i) uniquely whenever soc(Re_i) is simple.
    """
    if not dec.basic:
        return ()
    opp = ring.opposite()
    tops = [simple_top(ring, e) for e in dec.basic]
    tops_r = [simple_top(opp, e) for e in dec.basic]
    soc_l = []
    soc_r = []
    for e in dec.basic:
        mins_l = socle_of_projective(ring, e)
        soc_l.append(module_from_subset(ring, mins_l[0].elements)
                     if len(mins_l) == 1 else None)
        mins_r = socle_of_projective(opp, e)
        soc_r.append(module_from_subset(opp, mins_r[0].elements)
                     if len(mins_r) == 1 else None)
    pi = []
    for i in range(len(dec.basic)):
        if soc_l[i] is None:
            return None
        match = None
        for j in range(len(dec.basic)):
            if simple_modules_isomorphic(soc_l[i], tops[j]):
                match = j
                break
        if match is None or soc_r[match] is None:
            return None
        if not simple_modules_isomorphic(soc_r[match], tops_r[i]):
            return None
        pi.append(match)
    if sorted(pi) != list(range(len(dec.basic))):
        return None
    return tuple(pi)


def classify(ring):
    """Full classification certificate for a finite ring."""
    cached = ring._cache.get("classification")
    if cached is not None:
        return cached
    dec = principal_decomposition(ring)
    profile = socle_profile(ring, dec)
    pi = nakayama_permutation(ring, dec)
    opp = ring.opposite()
    dec_op = principal_decomposition(opp)
    profile_op = socle_profile(opp, dec_op)
    semisimple = len(radical(ring)) == 1
    quasi_frobenius = pi is not None
    mu, nu = dec.multiplicities, profile.nu
    mu_r, nu_r = dec_op.multiplicities, profile_op.nu
    frobenius = quasi_frobenius and mu == nu
    embeds_left = all(a <= b for a, b in zip(nu, mu))
    embeds_right = all(a <= b for a, b in zip(nu_r, mu_r))
    cls = Classification(
        ring_name=ring.name, order=ring.order,
        semisimple=semisimple, quasi_frobenius=quasi_frobenius,
        nakayama=pi, frobenius=frobenius,
        socle_embeds_left=embeds_left, socle_embeds_right=embeds_right,
        mu=mu, nu=nu, mu_right=mu_r, nu_right=nu_r,
        decomposition=dec, profile=profile)
    _check_classification(cls)
    ring._cache["classification"] = cls
    return cls


def _check_classification(cls):
    if cls.frobenius and not (cls.quasi_frobenius and cls.socle_embeds_left
                              and cls.socle_embeds_right):
        raise InternalInconsistency("Frobenius verdict without its prerequisites")
    if cls.semisimple and not cls.frobenius:
        raise InternalInconsistency("semisimple ring not recognized as Frobenius")
    if cls.quasi_frobenius and cls.socle_embeds_left != cls.socle_embeds_right:
        raise InternalInconsistency(
            "socle embedding is one-sided on a quasi-Frobenius ring")
