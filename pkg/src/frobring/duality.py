"""Exact character theory of finite rings.

Characters of the additive group take values in Q/Z (never floating
point).  The dual group carries left and right module actions
(chi*r)(x) = chi(rx) and (r*chi)(x) = chi(xr); torsion-freeness of a
character (no nonzero one-sided ideal inside its kernel) is decided both
by minimal-ideal scan and by orbit density, and the two must agree.
"""

from itertools import product as iter_product

from .construct import GaloisField, MatrixRing, Opposite, Product, ZMod, build_ring
from .decomp import classify, simple_top
from .errors import (CapExceeded, InternalInconsistency, NotASubgroup,
                     NotInWedderburnForm)
from .exact import QZ, RootSum
from .ideals import minimal_left_ideals, minimal_right_ideals, radical, quotient_ring
from .modules import (FiniteModule, module_from_subset, peel_semisimple,
                      simple_iso_map, simple_modules_isomorphic,
                      submodule_as_module)

DUAL_ORDER_CAP = 2048


class AbelianBasis:
    """Invariant-factor basis of the additive group of a ring.

    orders d_1 | d_2 | ... | d_k ascending; every element has unique
    coordinates; the exponent is d_k.
    """

    def __init__(self, ring, generators, orders, coords):
        self.ring = ring
        self.generators = tuple(generators)
        self.orders = tuple(orders)
        self.coords = coords  # element -> tuple of residues
        self.exponent = orders[-1] if orders else 1

    def __repr__(self):
        return f"<abelian basis {self.orders} of {self.ring.name}>"


def abelian_basis(ring):
    cached = ring._cache.get("abelian_basis")
    if cached is not None:
        return cached
    pairs = _peel_cyclic(ring, tuple(range(ring.order)))
    pairs.reverse()  # ascending orders, so d_i | d_(i+1)
    generators = [g for g, _ in pairs]
    orders = [d for _, d in pairs]
    for a, b in zip(orders, orders[1:]):
        if b % a:
            raise InternalInconsistency("invariant factors fail divisibility")
    multiples = []
    for g, d in pairs:
        row = [ring.zero]
        for _ in range(d - 1):
            row.append(ring.add(row[-1], g))
        multiples.append(row)
    coords = {}
    for combo in iter_product(*(range(d) for d in orders)):
        x = ring.zero
        for i, c in enumerate(combo):
            x = ring.add(x, multiples[i][c])
        if x in coords:
            raise InternalInconsistency("abelian coordinates are not unique")
        coords[x] = combo
    if len(coords) != ring.order:
        raise InternalInconsistency("abelian coordinates are not surjective")
    basis = AbelianBasis(ring, generators, orders, coords)
    ring._cache["abelian_basis"] = basis
    return basis


def _peel_cyclic(ring, subgroup):
    """Max-order generator plus greedy complement, recursively.

    Any inclusion-maximal subgroup meeting the chosen cyclic part
    trivially is a direct complement, so a single greedy pass works.
    """
    if len(subgroup) == 1:
        return []
    orders = {x: ring.additive_order(x) for x in subgroup}
    dmax = max(orders.values())
    g = min(x for x in subgroup if orders[x] == dmax)
    cyc = set()
    acc = ring.zero
    for _ in range(dmax):
        cyc.add(acc)
        acc = ring.add(acc, g)
    comp = {ring.zero}
    target = len(subgroup) // dmax
    for x in subgroup:
        if len(comp) == target:
            break
        if x in comp:
            continue
        grown = _subgroup_closure(ring, comp, x)
        if len(grown & cyc) == 1:
            comp = grown
    if len(comp) != target:
        raise InternalInconsistency("complement search failed")
    return [(g, dmax)] + _peel_cyclic(ring, tuple(sorted(comp)))


def _subgroup_closure(ring, base, extra):
    member = set(base)
    stack = [extra]
    member.add(extra)
    elems = list(member)
    while stack:
        x = stack.pop()
        for y in list(elems):
            z = ring.add(x, y)
            if z not in member:
                member.add(z)
                elems.append(z)
                stack.append(z)
    return member


class Character:
    """A homomorphism (R,+) -> Q/Z, stored by its values on the basis."""

    __slots__ = ("basis", "kvec")

    def __init__(self, basis, kvec):
        self.basis = basis
        self.kvec = tuple(kvec)
        for k, d in zip(self.kvec, basis.orders):
            if not 0 <= k < d:
                raise ValueError("character residue out of range")

    def __repr__(self):
        vals = ",".join(f"{k}/{d}" for k, d in zip(self.kvec, self.basis.orders))
        return f"Character({vals or 'trivial'})"

    def __eq__(self, other):
        return (isinstance(other, Character) and self.basis is other.basis
                and self.kvec == other.kvec)

    def __hash__(self):
        return hash((id(self.basis), self.kvec))

    def value(self, x):
        out = QZ(0, 1)
        for k, d, c in zip(self.kvec, self.basis.orders, self.basis.coords[x]):
            out = out + QZ(k * c, d)
        return out

    def scaled(self, x):
        """chi(x) as an integer multiple of 1/exponent."""
        N = self.basis.exponent
        total = 0
        for k, d, c in zip(self.kvec, self.basis.orders, self.basis.coords[x]):
            total += k * c * (N // d)
        return total % N

    def is_trivial(self):
        return all(k == 0 for k in self.kvec)

    def kernel(self):
        return tuple(x for x in range(self.basis.ring.order) if self.scaled(x) == 0)

    def gen_values(self):
        return tuple(QZ(k, d) for k, d in zip(self.kvec, self.basis.orders))


class DualGroup:
    """The full character group of (R,+) with its R-module actions."""

    def __init__(self, ring):
        if ring.order > DUAL_ORDER_CAP:
            raise CapExceeded(
                f"dual tables of order {ring.order} exceed cap {DUAL_ORDER_CAP}")
        self.ring = ring
        self.basis = abelian_basis(ring)
        self.size = ring.order
        orders = self.basis.orders
        self.strides = []
        acc = 1
        for d in orders:
            self.strides.append(acc)
            acc *= d
        if acc != ring.order:
            raise InternalInconsistency("character count differs from group order")
        self.kvecs = [self._kvec_of(i) for i in range(self.size)]
        N = self.basis.exponent
        # scaled[c][x] = N * chi_c(x) as an integer mod N
        self.scaled = []
        gen_scaled = [[(k * (N // d)) % N for k in range(d)] for d in orders]
        for kvec in self.kvecs:
            row = []
            for x in range(ring.order):
                total = 0
                for i, c in enumerate(self.basis.coords[x]):
                    total += gen_scaled[i][kvec[i]] * c
                row.append(total % N)
            self.scaled.append(row)
        self._right = {}
        self._left = {}
        self._verify_pairing()

    def _kvec_of(self, index):
        out = []
        for d in self.basis.orders:
            index, r = divmod(index, d)
            out.append(r)
        return tuple(out)

    def index_of(self, kvec):
        return sum(k * s for k, s in zip(kvec, self.strides))

    def char(self, index):
        return Character(self.basis, self.kvecs[index])

    def index_of_character(self, chi):
        if chi.basis is not self.basis:
            raise ValueError("character belongs to a different basis")
        return self.index_of(chi.kvec)

    def add_chars(self, c1, c2):
        kv = tuple((a + b) % d for a, b, d in
                   zip(self.kvecs[c1], self.kvecs[c2], self.basis.orders))
        return self.index_of(kv)

    def _index_from_scaled_on_gens(self, values):
        N = self.basis.exponent
        kvec = []
        for t, d in zip(values, self.basis.orders):
            if (t * d) % N:
                raise InternalInconsistency("action image is not a character")
            kvec.append((t * d // N) % d)
        return self.index_of(kvec)

    def right_act(self, c, r):
        """(chi * r)(x) = chi(r x)."""
        key = (c, r)
        out = self._right.get(key)
        if out is None:
            row = self.scaled[c]
            vals = [row[self.ring.mul(r, g)] for g in self.basis.generators]
            out = self._index_from_scaled_on_gens(vals)
            self._right[key] = out
        return out

    def left_act(self, c, r):
        """(r * chi)(x) = chi(x r)."""
        key = (c, r)
        out = self._left.get(key)
        if out is None:
            row = self.scaled[c]
            vals = [row[self.ring.mul(g, r)] for g in self.basis.generators]
            out = self._index_from_scaled_on_gens(vals)
            self._left[key] = out
        return out

    def right_orbit(self, c):
        return tuple(sorted({self.right_act(c, r) for r in range(self.ring.order)}))

    def left_orbit(self, c):
        return tuple(sorted({self.left_act(c, r) for r in range(self.ring.order)}))

    def _verify_pairing(self):
        # non-degeneracy in both slots: finite Pontryagin duality
        n = self.ring.order
        for x in range(n):
            if x != self.ring.zero and all(self.scaled[c][x] == 0 for c in range(n)):
                raise InternalInconsistency("pairing degenerate in the group slot")
        for c in range(n):
            if c != 0 and all(v == 0 for v in self.scaled[c]):
                raise InternalInconsistency("pairing degenerate in the character slot")


def dual_group(ring):
    cached = ring._cache.get("dual_group")
    if cached is None:
        cached = DualGroup(ring)
        ring._cache["dual_group"] = cached
    return cached


# ---- annihilator correspondence ----

def _check_subgroup(ring, elems):
    s = set(elems)
    if ring.zero not in s:
        raise NotASubgroup("missing zero")
    for a in s:
        for b in s:
            if ring.add(a, b) not in s:
                raise NotASubgroup(f"not closed under addition at ({a},{b})")


def gamma(ring, subgroup):
    """Characters vanishing on the subgroup; |Gamma(A)| = [R : A]."""
    _check_subgroup(ring, subgroup)
    dual = dual_group(ring)
    sub = set(subgroup)
    out = tuple(c for c in range(dual.size)
                if all(dual.scaled[c][x] == 0 for x in sub))
    if len(out) * len(sub) != ring.order:
        raise InternalInconsistency("Gamma(A) has the wrong order")
    return out


def delta(ring, char_indices):
    """Common kernel of a set of characters."""
    dual = dual_group(ring)
    cset = set(char_indices)
    if 0 not in cset:
        raise NotASubgroup("missing trivial character")
    for a in cset:
        for b in cset:
            if dual.add_chars(a, b) not in cset:
                raise NotASubgroup("character set not closed under addition")
    return tuple(x for x in range(ring.order)
                 if all(dual.scaled[c][x] == 0 for c in cset))


def is_dual_right_submodule(ring, char_indices):
    dual = dual_group(ring)
    cset = set(char_indices)
    return all(dual.right_act(c, r) in cset for c in cset for r in range(ring.order))


def is_dual_left_submodule(ring, char_indices):
    dual = dual_group(ring)
    cset = set(char_indices)
    return all(dual.left_act(c, r) in cset for c in cset for r in range(ring.order))


# ---- torsion-freeness ----

def is_left_torsion_free(ring, chi):
    """No nonzero left ideal inside ker(chi).

    Scanning minimal left ideals suffices: every nonzero left ideal of a
    finite ring contains a minimal one.
    """
    kernel = set(chi.kernel())
    return not any(set(ideal.elements) <= kernel
                   for ideal in minimal_left_ideals(ring))


def is_right_torsion_free(ring, chi):
    kernel = set(chi.kernel())
    return not any(set(ideal.elements) <= kernel
                   for ideal in minimal_right_ideals(ring))


def torsion_free_via_density(ring, chi):
    """Left torsion-free iff the right orbit chi*R is all of the dual."""
    dual = dual_group(ring)
    return len(dual.right_orbit(dual.index_of_character(chi))) == ring.order


def right_torsion_free_via_density(ring, chi):
    dual = dual_group(ring)
    return len(dual.left_orbit(dual.index_of_character(chi))) == ring.order


def scan_torsion_free(ring, side="left"):
    """Least torsion-free character by exhaustive scan, or None.

    The scan is the independent oracle for the constructive paths.
    """
    dual = dual_group(ring)
    for c in range(dual.size):
        chi = dual.char(c)
        if side in ("left", "both") and not is_left_torsion_free(ring, chi):
            continue
        if side in ("right", "both") and not is_right_torsion_free(ring, chi):
            continue
        return chi
    return None


# ---- the dual as a right module ----

def dual_as_right_module(ring):
    """The dual group as a left module over R^op (i.e. a right R-module)."""
    cached = ring._cache.get("dual_right_module")
    if cached is not None:
        return cached
    dual = dual_group(ring)
    n = dual.size
    add = [dual.add_chars(a, b) for a in range(n) for b in range(n)]
    act = [dual.right_act(c, r) for r in range(ring.order) for c in range(n)]
    mod = FiniteModule(ring.opposite(), n, add, act, 0, check=True)
    ring._cache["dual_right_module"] = mod
    return mod


def dual_is_cyclic(ring):
    return dual_as_right_module(ring).is_cyclic()


def dual_covered_by_proper_submodules(ring):
    return dual_as_right_module(ring).covered_by_proper_submodules()


# ---- constructive characters ----

def semisimple_character(ring):
    """Torsion-free character of a semisimple ring.

    When the ring was built as a product of matrix rings over fields the
    character is assembled structurally: absolute trace over p for each
    field, precomposition with the matrix trace, summation over factors.
    Otherwise falls back to the exhaustive scan.  The result is verified
    torsion-free on both sides.
    """
    try:
        fn = _structural_character(ring)
        basis = abelian_basis(ring)
        kvec = []
        for g, d in zip(basis.generators, basis.orders):
            v = fn(g)
            if d % v.den:
                raise InternalInconsistency("structural character has bad order")
            kvec.append((v.num * (d // v.den)) % d)
        chi = Character(basis, kvec)
        for x in range(ring.order):
            if chi.value(x) != fn(x):
                raise InternalInconsistency("structural character is not additive")
    except NotInWedderburnForm:
        chi = scan_torsion_free(ring, side="both")
        if chi is None:
            raise NotInWedderburnForm(
                f"{ring.name}: not in product-of-matrix-rings form and no "
                "torsion-free character exists") from None
    if not (is_left_torsion_free(ring, chi) and is_right_torsion_free(ring, chi)):
        raise InternalInconsistency("semisimple character is not torsion-free")
    return chi


def _structural_character(ring):
    expr = ring.expr
    if isinstance(expr, ZMod):
        p = expr.n
        if p < 2 or any(p % d == 0 for d in range(2, p)):
            raise NotInWedderburnForm(f"Z/{p} is not a prime field")
        return lambda x: QZ(x, p)
    if isinstance(expr, GaloisField):
        p, k = expr.p, expr.k
        def field_char(x, ring=ring, p=p, k=k):
            acc = x
            t = x
            for _ in range(k - 1):
                t = ring.power(t, p)
                acc = ring.add(acc, t)
            if acc >= p:
                raise InternalInconsistency("trace left the prime subfield")
            return QZ(acc, p)
        return field_char
    if isinstance(expr, MatrixRing):
        base = build_ring(expr.base)
        base_fn = _structural_character(base)
        k, b = expr.k, base.order
        def matrix_char(x, base=base, base_fn=base_fn, k=k, b=b):
            entries = [0] * (k * k)
            for pos in range(k * k - 1, -1, -1):
                x, entries[pos] = divmod(x, b)
            tr = base.zero
            for i in range(k):
                tr = base.add(tr, entries[i * k + i])
            return base_fn(tr)
        return matrix_char
    if isinstance(expr, Product):
        bases = [build_ring(f) for f in expr.factors]
        fns = [_structural_character(rb) for rb in bases]
        sizes = [rb.order for rb in bases]
        def product_char(x, fns=fns, sizes=sizes):
            parts = [0] * len(sizes)
            for pos in range(len(sizes) - 1, -1, -1):
                x, parts[pos] = divmod(x, sizes[pos])
            out = QZ(0, 1)
            for f, part in zip(fns, parts):
                out = out + f(part)
            return out
        return product_char
    raise NotInWedderburnForm(f"{ring.name} was not built as matrix rings over fields")


def find_torsion_free_character(ring):
    """A left torsion-free character, or None when none exists.

    When the socle embeds into R/rad the character is constructed: the
    socle is mapped into the semisimple quotient summand by summand, a
    torsion-free character of the quotient is pulled back, and the
    partial character is extended over the whole additive group (Q/Z is
    divisible, so the extension always exists).  Otherwise absence is
    certified by exhaustive scan.
    """
    cls = classify(ring)
    if not cls.socle_embeds_left:
        chi = scan_torsion_free(ring, side="left")
        if chi is not None:
            raise InternalInconsistency(
                f"{ring.name}: socle does not embed but a torsion-free character exists")
        return None
    squotient, phi = _socle_embedding(ring, cls)
    chi_s = semisimple_character(squotient)
    partial = {x: chi_s.value(s) for x, s in phi.items()}
    values = _divisible_extension(ring, partial)
    basis = abelian_basis(ring)
    kvec = []
    for g, d in zip(basis.generators, basis.orders):
        v = values[g]
        if d % v.den:
            raise InternalInconsistency("extended character has bad generator order")
        kvec.append((v.num * (d // v.den)) % d)
    chi = Character(basis, kvec)
    for x in range(ring.order):
        if chi.value(x) != values[x]:
            raise InternalInconsistency("character extension is not additive")
    if not is_left_torsion_free(ring, chi):
        raise InternalInconsistency("constructed character is not torsion-free")
    return chi


def _socle_embedding(ring, cls):
    """Left-module embedding of the socle into R/rad, as an element map."""
    squotient, proj = quotient_ring(ring, radical(ring))
    m = squotient.order
    reps = [None] * m
    for x in range(ring.order):
        if reps[proj[x]] is None:
            reps[proj[x]] = x
    act = [proj[ring.mul(r, reps[s])] for r in range(ring.order) for s in range(m)]
    smod = FiniteModule(ring, m, list(squotient.add_table), act,
                        proj[ring.zero], check=False)
    tops = [simple_top(ring, e) for e in cls.decomposition.basic]
    speels, covered = peel_semisimple(smod)
    if len(covered) != m:
        raise InternalInconsistency("semisimple quotient is not a sum of simples")
    by_class = {}
    for sub in speels:
        sub_mod = submodule_as_module(smod, sub)
        for j, top in enumerate(tops):
            if simple_modules_isomorphic(sub_mod, top):
                by_class.setdefault(j, []).append(sub)
                break
        else:
            raise InternalInconsistency("quotient summand matches no simple top")
    used = {j: 0 for j in range(len(tops))}
    phi = {ring.zero: smod.zero}
    for elements, j in cls.profile.peels:
        slot = used[j]
        used[j] += 1
        target = by_class[j][slot]  # nu_j <= mu_j guarantees availability
        iso = simple_iso_map(module_from_subset(ring, elements),
                             submodule_as_module(smod, target))
        f_t = {elements[a]: target[iso[a]] for a in range(len(elements))}
        new_phi = {}
        for s, img in phi.items():
            for a, fa in f_t.items():
                x = ring.add(s, a)
                if x in new_phi:
                    raise InternalInconsistency("socle summands are not independent")
                new_phi[x] = smod.add(img, fa)
        phi = new_phi
    return squotient, phi


def _divisible_extension(ring, partial):
    """Extend a partial character on a subgroup to all of (R,+).

    For each new generator g, the least k with k*g inside the domain
    forces k*value = chi(k*g); the least canonical solution is chosen.
    """
    values = dict(partial)
    for g in range(ring.order):
        if g in values:
            continue
        k = 1
        acc = g
        while acc not in values:
            acc = ring.add(acc, g)
            k += 1
        target = values[acc]
        v = QZ(target.num, target.den * k)
        ig = ring.zero
        iv = QZ(0, 1)
        base_items = list(values.items())
        for _ in range(1, k):
            ig = ring.add(ig, g)
            iv = iv + v
            for a, va in base_items:
                x = ring.add(a, ig)
                if x in values:
                    raise InternalInconsistency("coset decomposition clash")
                values[x] = va + iv
    for x, vx in values.items():
        for y, vy in values.items():
            if values[ring.add(x, y)] != vx + vy:
                raise InternalInconsistency("extension is not a homomorphism")
    return values


# ---- exact character sums ----

def haar_character_sum(ring, chi):
    """Exact sum of chi over the group, as a RootSum, with the 1/0 verdict.

    The normalized average is 1 for the trivial character and exactly 0
    otherwise; the zero is asserted via cyclotomic reduction, not assumed.
    """
    basis = chi.basis
    N = basis.exponent
    counts = [0] * N
    for x in range(ring.order):
        counts[chi.scaled(x)] += 1
    rs = RootSum(N, counts)
    if chi.is_trivial():
        if rs.constant_value() != ring.order:
            raise InternalInconsistency("trivial character sum is not |G|")
        return rs, 1
    if not rs.is_zero():
        raise InternalInconsistency("nontrivial character sum is not zero")
    return rs, 0


def hamming_weight_via_characters(ring, vector):
    """Hamming weight via the dual-side character sum, exactly.

    Each coordinate contributes 1 - (1/|R|) * sum_chi chi(x_i); the inner
    sums are evaluated as RootSums and must reduce to 0 or |R|.
    """
    dual = dual_group(ring)
    N = dual.basis.exponent
    n = ring.order
    weight = 0
    for x in vector:
        counts = [0] * N
        for c in range(dual.size):
            counts[dual.scaled[c][x]] += 1
        value = RootSum(N, counts).constant_value()
        if value not in (0, n):
            raise InternalInconsistency("coordinate character sum is not 0 or |R|")
        weight += 1 - value // n
    return weight
