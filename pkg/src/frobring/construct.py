"""Ring constructors: build explicit Cayley-table rings from expressions.

Supported constructors: Z/n, Galois fields, matrix rings, direct
products, group rings over small groups, F_p-algebras given by structure
constants, and the opposite ring.  Construction is deterministic: the
same expression always yields the same element indexing and labels.
"""

import os
from array import array
from dataclasses import dataclass, field

from .errors import CapExceeded, NotARing, ReduciblePolynomial
from .rings import FiniteRing

DEFAULT_ORDER_CAP = 4096


def order_cap():
    env = os.environ.get("FROBRING_ORDER_CAP")
    return int(env) if env else DEFAULT_ORDER_CAP


class RingExpr:
    """Base class for ring construction expressions."""


@dataclass(frozen=True)
class ZMod(RingExpr):
    n: int


@dataclass(frozen=True)
class GaloisField(RingExpr):
    p: int
    k: int
    poly: tuple = None  # monic irreducible, coefficients c_0..c_k; None = least


@dataclass(frozen=True)
class MatrixRing(RingExpr):
    k: int
    base: RingExpr


@dataclass(frozen=True)
class Product(RingExpr):
    factors: tuple


@dataclass(frozen=True)
class GroupRing(RingExpr):
    base: RingExpr
    group: str  # "cyclic" | "dihedral" | "sym"
    m: int


@dataclass(frozen=True)
class FpAlgebra(RingExpr):
    p: int
    dim: int
    labels: tuple
    consts: tuple = field(default=())  # quadruples (i, j, k, v): e_i*e_j has coeff v on e_k


@dataclass(frozen=True)
class Opposite(RingExpr):
    base: RingExpr


def expr_order(expr):
    """Ring order the expression will produce, without building tables."""
    if isinstance(expr, ZMod):
        return expr.n
    if isinstance(expr, GaloisField):
        return expr.p ** expr.k
    if isinstance(expr, MatrixRing):
        return expr_order(expr.base) ** (expr.k * expr.k)
    if isinstance(expr, Product):
        out = 1
        for f in expr.factors:
            out *= expr_order(f)
        return out
    if isinstance(expr, GroupRing):
        return expr_order(expr.base) ** _group_order(expr.group, expr.m)
    if isinstance(expr, FpAlgebra):
        return expr.p ** expr.dim
    if isinstance(expr, Opposite):
        return expr_order(expr.base)
    raise TypeError(f"not a RingExpr: {expr!r}")


def expr_to_text(expr):
    """Textual form in the ring-spec grammar (see frobring.specparse)."""
    if isinstance(expr, ZMod):
        return f"zmod {expr.n}"
    if isinstance(expr, GaloisField):
        base = f"gf {expr.p} {expr.k}"
        if expr.poly is not None:
            return base + " poly " + " ".join(str(c) for c in expr.poly)
        return base
    if isinstance(expr, MatrixRing):
        return f"matrix {expr.k} {_paren(expr.base)}"
    if isinstance(expr, Product):
        return "product " + " ; ".join(_paren(f) for f in expr.factors)
    if isinstance(expr, GroupRing):
        return f"groupring {_paren(expr.base)} {expr.group} {expr.m}"
    if isinstance(expr, FpAlgebra):
        parts = [f"fpalgebra {expr.p} {expr.dim} labels", *expr.labels, "consts"]
        for i, j, k, v in expr.consts:
            parts += [str(i), str(j), str(k), str(v)]
        return " ".join(parts)
    if isinstance(expr, Opposite):
        return f"op {_paren(expr.base)}"
    raise TypeError(f"not a RingExpr: {expr!r}")


def _paren(expr):
    # products in argument position get parentheses, keeping the
    # line grammar unambiguous
    text = expr_to_text(expr)
    return f"( {text} )" if isinstance(expr, Product) else text


_BUILD_CACHE = {}


def build_ring(expr, cap=None):
    """Build the FiniteRing described by expr; deterministic indexing."""
    cap = order_cap() if cap is None else cap
    n = expr_order(expr)
    if n > cap:
        raise CapExceeded(f"ring of order {n} exceeds cap {cap}")
    if expr in _BUILD_CACHE:
        return _BUILD_CACHE[expr]
    ring = _dispatch(expr, cap)
    _BUILD_CACHE[expr] = ring
    return ring


def _dispatch(expr, cap):
    if isinstance(expr, ZMod):
        return _build_zmod(expr)
    if isinstance(expr, GaloisField):
        return _build_gf(expr)
    if isinstance(expr, MatrixRing):
        return _build_matrix(expr, cap)
    if isinstance(expr, Product):
        return _build_product(expr, cap)
    if isinstance(expr, GroupRing):
        return _build_groupring(expr, cap)
    if isinstance(expr, FpAlgebra):
        return _build_fpalgebra(expr)
    if isinstance(expr, Opposite):
        base = build_ring(expr.base, cap)
        opp = base.opposite()
        opp.expr = expr
        return opp
    raise TypeError(f"not a RingExpr: {expr!r}")


def _build_zmod(expr):
    n = expr.n
    if n < 1:
        raise NotARing("zmod needs n >= 1")
    add = array("i", [(i + j) % n for i in range(n) for j in range(n)])
    mul = array("i", [(i * j) % n for i in range(n) for j in range(n)])
    one = 1 % n
    return FiniteRing(n, add, mul, 0, one, name=f"Z/{n}", expr=expr)


# ---- polynomial arithmetic over F_p (dense coefficient lists, ascending) ----

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c

def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)

def _pmod(a, b, p):
    # remainder of a modulo monic b
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) - 1 >= db and _ptrim(a):
        shift = len(a) - 1 - db
        q = (a[-1] * inv_lead) % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - q * bi) % p
        _ptrim(a)
    return a

def _is_irreducible(poly, p):
    k = len(poly) - 1
    if k < 1 or poly[-1] == 0:
        return False
    for d in range(1, k // 2 + 1):
        for idx in range(p ** d):
            div = _digits(idx, p, d) + [1]
            if not _pmod(poly, div, p):
                return False
    return True

def _digits(value, base, count):
    out = []
    for _ in range(count):
        value, r = divmod(value, base)
        out.append(r)
    return out

def _least_irreducible(p, k):
    for idx in range(p ** k):
        poly = _digits(idx, p, k) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise ReduciblePolynomial(f"no irreducible polynomial found for p={p}, k={k}")


def _build_gf(expr):
    p, k = expr.p, expr.k
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise NotARing(f"gf needs prime p, got {p}")
    if k < 1:
        raise NotARing("gf needs k >= 1")
    if expr.poly is None:
        poly = _least_irreducible(p, k)
    else:
        poly = list(expr.poly)
        if len(poly) != k + 1 or poly[-1] % p != 1:
            raise ReduciblePolynomial("field polynomial must be monic of degree k")
        poly = [c % p for c in poly]
        if not _is_irreducible(poly, p):
            raise ReduciblePolynomial(f"{poly} is reducible over F_{p}")
    n = p ** k
    coeffs = [_digits(i, p, k) for i in range(n)]
    def enc(c):
        out = 0
        for v in reversed(c[:k] + [0] * (k - len(c))):
            out = out * p + v
        return out
    add = array("i", bytes(4 * n * n))
    mul = array("i", bytes(4 * n * n))
    for i in range(n):
        for j in range(n):
            add[i * n + j] = enc([(a + b) % p for a, b in zip(coeffs[i], coeffs[j])])
            mul[i * n + j] = enc(_pmod(_pmul(coeffs[i], coeffs[j], p), poly, p))
    labels = [_poly_label(coeffs[i], "w") for i in range(n)]
    name = f"GF({n})"
    return FiniteRing(n, add, mul, 0, enc([1]), name=name, labels=labels, expr=expr)


def _poly_label(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i] if i < len(coeffs) else 0
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
    return "+".join(terms) if terms else "0"


def _build_matrix(expr, cap):
    base = build_ring(expr.base, cap)
    k, b = expr.k, base.order
    if k < 1:
        raise NotARing("matrix needs k >= 1")
    size = k * k
    n = b ** size
    def decode(idx):
        out = [0] * size
        for pos in range(size - 1, -1, -1):
            idx, out[pos] = divmod(idx, b)
        return out
    def encode(entries):
        out = 0
        for e in entries:
            out = out * b + e
        return out
    mats = [decode(i) for i in range(n)]
    add = array("i", bytes(4 * n * n))
    mul = array("i", bytes(4 * n * n))
    for i in range(n):
        mi = mats[i]
        for j in range(n):
            mj = mats[j]
            add[i * n + j] = encode([base.add(a, c) for a, c in zip(mi, mj)])
            prod = [0] * size
            for r in range(k):
                for c in range(k):
                    acc = base.zero
                    for t in range(k):
                        acc = base.add(acc, base.mul(mi[r * k + t], mj[t * k + c]))
                    prod[r * k + c] = acc
            mul[i * n + j] = encode(prod)
    eye = encode([base.one if r == c else base.zero
                  for r in range(k) for c in range(k)])
    zero = encode([base.zero] * size)
    labels = ["[" + ";".join(",".join(base.label(m[r * k + c]) for c in range(k))
                             for r in range(k)) + "]" for m in mats]
    return FiniteRing(n, add, mul, zero, eye, name=f"M{k}({base.name})",
                      labels=labels, expr=expr)


def _build_product(expr, cap):
    bases = [build_ring(f, cap) for f in expr.factors]
    if not bases:
        raise NotARing("product needs at least one factor")
    sizes = [b.order for b in bases]
    n = 1
    for s in sizes:
        n *= s
    def decode(idx):
        out = [0] * len(sizes)
        for pos in range(len(sizes) - 1, -1, -1):
            idx, out[pos] = divmod(idx, sizes[pos])
        return out
    def encode(parts):
        out = 0
        for v, s in zip(parts, sizes):
            out = out * s + v
        return out
    tuples = [decode(i) for i in range(n)]
    add = array("i", bytes(4 * n * n))
    mul = array("i", bytes(4 * n * n))
    for i in range(n):
        ti = tuples[i]
        for j in range(n):
            tj = tuples[j]
            add[i * n + j] = encode([b.add(a, c) for b, a, c in zip(bases, ti, tj)])
            mul[i * n + j] = encode([b.mul(a, c) for b, a, c in zip(bases, ti, tj)])
    one = encode([b.one for b in bases])
    zero = encode([b.zero for b in bases])
    labels = ["(" + ",".join(b.label(v) for b, v in zip(bases, t)) + ")" for t in tuples]
    return FiniteRing(n, add, mul, zero, one, name=" x ".join(b.name for b in bases),
                      labels=labels, expr=expr)


def _group_order(kind, m):
    if kind == "cyclic":
        return m
    if kind == "dihedral":
        return 2 * m
    if kind == "sym":
        if m != 3:
            raise NotARing("only sym 3 is supported")
        return 6
    raise NotARing(f"unknown group kind {kind!r}")


def _group_table(kind, m):
    """(order, flat mul table, element names); identity has index 0."""
    if kind == "cyclic":
        g = m
        table = [(i + j) % m for i in range(m) for j in range(m)]
        names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, m)]
        return g, table, names
    if kind == "dihedral":
        g = 2 * m
        def gmul(a, b):
            i, s = a % m, a // m
            j, t = b % m, b // m
            rot = (i + j) % m if s == 0 else (i - j) % m
            return rot + m * (s ^ t)
        table = [gmul(a, b) for a in range(g) for b in range(g)]
        names = []
        for s in range(2):
            for i in range(m):
                rot = "1" if i == 0 else ("r" if i == 1 else f"r^{i}")
                names.append(rot if s == 0 else (f"{rot}s" if i else "s"))
        return g, table, names
    # sym 3: permutations of (0,1,2) in lexicographic order
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    table = [index[tuple(p[q[i]] for i in range(3))] for p in perms for q in perms]
    names = ["".join(str(v) for v in p) for p in perms]
    return 6, table, names


def _build_groupring(expr, cap):
    base = build_ring(expr.base, cap)
    g, gtable, gnames = _group_table(expr.group, expr.m)
    b = base.order
    n = b ** g
    def decode(idx):
        out = [0] * g
        for pos in range(g):
            idx, out[pos] = divmod(idx, b)
        return out
    def encode(coeffs):
        out = 0
        for v in reversed(coeffs):
            out = out * b + v
        return out
    vecs = [decode(i) for i in range(n)]
    add = array("i", bytes(4 * n * n))
    mul = array("i", bytes(4 * n * n))
    for i in range(n):
        vi = vecs[i]
        for j in range(n):
            vj = vecs[j]
            add[i * n + j] = encode([base.add(a, c) for a, c in zip(vi, vj)])
            conv = [base.zero] * g
            for s in range(g):
                cs = vi[s]
                if cs == base.zero:
                    continue
                srow = s * g
                for t in range(g):
                    ct = vj[t]
                    if ct == base.zero:
                        continue
                    u = gtable[srow + t]
                    conv[u] = base.add(conv[u], base.mul(cs, ct))
            mul[i * n + j] = encode(conv)
    one = encode([base.one] + [base.zero] * (g - 1))
    zero = encode([base.zero] * g)
    labels = [_formal_sum(v, gnames, base) for v in vecs]
    gname = {"cyclic": f"C{expr.m}", "dihedral": f"D{expr.m}", "sym": f"S{expr.m}"}[expr.group]
    return FiniteRing(n, add, mul, zero, one, name=f"{base.name}[{gname}]",
                      labels=labels, expr=expr)


def _formal_sum(coeffs, names, base):
    terms = []
    for c, name in zip(coeffs, names):
        if c == base.zero:
            continue
        cl = base.label(c)
        if cl == "1":
            terms.append(name)
        elif name == "1":
            terms.append(cl)
        else:
            terms.append(f"{cl}*{name}")
    return "+".join(terms) if terms else "0"


def _build_fpalgebra(expr):
    p, dim = expr.p, expr.dim
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise NotARing(f"fpalgebra needs prime p, got {p}")
    if dim < 1 or len(expr.labels) != dim:
        raise NotARing("fpalgebra needs one label per basis element")
    # basis element 0 is the unit; structure constants cover i, j >= 1
    prod = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        unit_row = [0] * dim
        unit_row[i] = 1
        prod[0][i] = list(unit_row)
        prod[i][0] = list(unit_row)
    for i in range(1, dim):
        for j in range(1, dim):
            if prod[i][j] is None:
                prod[i][j] = [0] * dim
    seen = set()
    for i, j, k, v in expr.consts:
        if not (1 <= i < dim and 1 <= j < dim and 0 <= k < dim):
            raise NotARing(f"structure constant ({i},{j},{k}) out of range")
        if (i, j, k) in seen:
            raise NotARing(f"duplicate structure constant for ({i},{j},{k})")
        seen.add((i, j, k))
        prod[i][j][k] = v % p
    # associativity on basis triples extends to the whole algebra
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                left = _alg_mul(prod, prod[i][j], [int(t == k) for t in range(dim)], p, dim)
                right = _alg_mul(prod, [int(t == i) for t in range(dim)], prod[j][k], p, dim)
                if left != right:
                    raise NotARing(
                        f"structure constants are not associative at basis triple ({i},{j},{k})")
    n = p ** dim
    vecs = [_digits(i, p, dim) for i in range(n)]
    def encode(vec):
        out = 0
        for v in reversed(vec):
            out = out * p + v
        return out
    add = array("i", bytes(4 * n * n))
    mul = array("i", bytes(4 * n * n))
    for a in range(n):
        va = vecs[a]
        for b in range(n):
            vb = vecs[b]
            add[a * n + b] = encode([(x + y) % p for x, y in zip(va, vb)])
            mul[a * n + b] = encode(_alg_mul(prod, va, vb, p, dim))
    labels = [_fp_label(v, expr.labels) for v in vecs]
    name = f"F{p}[{','.join(expr.labels[1:])}]" if dim > 1 else f"F{p}"
    return FiniteRing(n, add, mul, 0, 1, name=name, labels=labels, expr=expr)


def _alg_mul(prod, u, v, p, dim):
    out = [0] * dim
    for i in range(dim):
        if not u[i]:
            continue
        for j in range(dim):
            if not v[j]:
                continue
            c = (u[i] * v[j]) % p
            for k, w in enumerate(prod[i][j]):
                if w:
                    out[k] = (out[k] + c * w) % p
    return out


def _fp_label(coeffs, labels):
    terms = []
    for c, lab in zip(coeffs, labels):
        if not c:
            continue
        if lab == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(lab)
        else:
            terms.append(f"{c}{lab}")
    return "+".join(terms) if terms else "0"
