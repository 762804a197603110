"""Pure-Python kernels for the exhaustive table searches.

All functions work on flat row-major Cayley tables (``table[i*n + j]``)
with elements named by indices ``0..n-1``.  Vectors in R^length are
encoded as integers with the first coordinate most significant, so the
integer order of encodings equals lexicographic order of tuples.

A compiled twin of this module (``frobring._kernels``) implements the
same signatures; ``frobring.kernels`` selects between them at import.
"""


def ring_law_violation(add, mul, n, zero, one, triples=None):
    """First violated unital-ring axiom, as a small error code (0 = none).

    codes: 1 add not commutative, 2 add not associative, 3 zero not
    neutral, 4 missing negative, 5 mul not associative, 6 one not
    neutral, 7/8 left/right distributivity, 9 zero does not annihilate.
    ``triples`` is an optional flat [x,y,z,...] sample; None = exhaustive.
    """
    for x in range(n):
        if add[x * n + zero] != x or add[zero * n + x] != x:
            return 3
        if mul[x * n + one] != x or mul[one * n + x] != x:
            return 6
        if mul[x * n + zero] != zero or mul[zero * n + x] != zero:
            return 9
        row = x * n
        if not any(add[row + y] == zero for y in range(n)):
            return 4
        for y in range(n):
            if add[row + y] != add[y * n + x]:
                return 1
    if triples is None:
        flat = None
        count = n * n * n
    else:
        flat = triples
        count = len(triples) // 3
    for t in range(count):
        if flat is None:
            x, rest = divmod(t, n * n)
            y, z = divmod(rest, n)
        else:
            x, y, z = flat[3 * t], flat[3 * t + 1], flat[3 * t + 2]
        if add[add[x * n + y] * n + z] != add[x * n + add[y * n + z]]:
            return 2
        if mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]]:
            return 5
        if mul[x * n + add[y * n + z]] != add[mul[x * n + y] * n + mul[x * n + z]]:
            return 7
        if mul[add[x * n + y] * n + z] != add[mul[x * n + z] * n + mul[y * n + z]]:
            return 8
    return 0


def additive_closure(add, n, zero, seeds):
    # subgroup of (R,+) generated by seeds; returns sorted indices
    member = bytearray(n)
    member[zero] = 1
    elems = [zero]
    stack = []
    for s in seeds:
        if not member[s]:
            member[s] = 1
            elems.append(s)
            stack.append(s)
    while stack:
        x = stack.pop()
        base = x * n
        for y in list(elems):
            z = add[base + y]
            if not member[z]:
                member[z] = 1
                elems.append(z)
                stack.append(z)
    elems.sort()
    return elems


def left_span(add, mul, n, zero, gens):
    # smallest left ideal containing gens: additive closure of the orbits R*g
    seeds = set()
    for g in gens:
        for r in range(n):
            seeds.add(mul[r * n + g])
    return additive_closure(add, n, zero, sorted(seeds))


def unit_mask(mul, n, one):
    # two-sided invertibles; one-sided would suffice in a finite ring but
    # the two-sided check is cheap and matches the definition
    mask = bytearray(n)
    for u in range(n):
        base = u * n
        for v in range(n):
            if mul[base + v] == one and mul[v * n + u] == one:
                mask[u] = 1
                break
    return mask


def quasiregular_mask(add, mul, n, one, neg, units):
    # x is in rad R iff 1 - r*x is a unit for every r
    mask = bytearray(n)
    onerow = one * n
    for x in range(n):
        ok = 1
        for r in range(n):
            t = mul[r * n + x]
            if not units[add[onerow + neg[t]]]:
                ok = 0
                break
        mask[x] = ok
    return mask


def _smul(mul, n, length, r, enc):
    # scalar multiple r*v of an encoded vector
    out = 0
    w = n ** (length - 1)
    rbase = r * n
    rest = enc
    for _ in range(length):
        d, rest = divmod(rest, w)
        out = out * n + mul[rbase + d]
        if w > 1:
            w //= n
    return out


def _vadd(add, n, length, a, b):
    out = 0
    w = n ** (length - 1)
    for _ in range(length):
        da, a = divmod(a, w)
        db, b = divmod(b, w)
        out = out * n + add[da * n + db]
        if w > 1:
            w //= n
    return out


def _vweight(n, length, zero, enc):
    c = 0
    for _ in range(length):
        enc, d = divmod(enc, n)
        if d != zero:
            c += 1
    return c


def code_span(add, mul, n, length, zero, gens):
    # smallest left submodule of R^length containing the encoded gens
    zvec = 0
    for _ in range(length):
        zvec = zvec * n + zero
    seeds = set()
    for g in gens:
        for r in range(n):
            seeds.add(_smul(mul, n, length, r, g))
    member = {zvec}
    elems = [zvec]
    stack = []
    for s in sorted(seeds):
        if s not in member:
            member.add(s)
            elems.append(s)
            stack.append(s)
    while stack:
        x = stack.pop()
        for y in list(elems):
            z = _vadd(add, n, length, x, y)
            if z not in member:
                member.add(z)
                elems.append(z)
                stack.append(z)
    elems.sort()
    return elems


def code_lattice(add, mul, n, length, zero, size_cap, count_cap):
    """All left submodules of R^length with at most size_cap elements.

    Returns sorted element tuples, ordered lexicographically.  Raises
    RuntimeError("cap") when more than count_cap submodules appear.
    """
    total = n ** length
    zvec = 0
    for _ in range(length):
        zvec = zvec * n + zero
    start = (zvec,)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for code in frontier:
            cset = set(code)
            for v in range(total):
                if v in cset:
                    continue
                grown = _grow_code(add, mul, n, length, code, cset, v)
                if len(grown) > size_cap:
                    continue
                key = tuple(grown)
                if key not in seen:
                    seen.add(key)
                    if len(seen) > count_cap:
                        raise RuntimeError("cap")
                    nxt.append(key)
        frontier = nxt
    return sorted(seen)


def _grow_code(add, mul, n, length, code, cset, v):
    # closure of a submodule plus one extra generator
    member = set(cset)
    elems = list(code)
    stack = []
    for r in range(n):
        s = _smul(mul, n, length, r, v)
        if s not in member:
            member.add(s)
            elems.append(s)
            stack.append(s)
    while stack:
        x = stack.pop()
        for y in list(elems):
            z = _vadd(add, n, length, x, y)
            if z not in member:
                member.add(z)
                elems.append(z)
                stack.append(z)
    elems.sort()
    return elems


def linear_maps(add, mul, n, length, elems, gen_slots, candidates,
                zero, check_weights, need_injective):
    """Enumerate left-linear maps M -> R^length by depth-first search.

    ``elems`` is the sorted encoded element list of a submodule M of
    R^length, ``gen_slots`` are positions of a generating set within it,
    and ``candidates[t]`` lists the allowed images of generator t.  Each
    returned map is a list giving the image of ``elems[i]`` at index i.
    When ``check_weights`` is set, maps must preserve Hamming weight on
    every element (not just generators); when ``need_injective`` is set,
    only injective maps are returned.  Candidate order is preserved, so
    the output order is deterministic.
    """
    m = len(elems)
    pos = {e: i for i, e in enumerate(elems)}
    zvec = 0
    for _ in range(length):
        zvec = zvec * n + zero
    weights = None
    if check_weights:
        weights = [_vweight(n, length, zero, e) for e in elems]
    f = [-1] * m
    f[pos[zvec]] = zvec
    known = [pos[zvec]]
    out = []

    def assign(depth):
        if depth == len(gen_slots):
            out.append(list(f))
            return
        g = elems[gen_slots[depth]]
        base_known = list(known)
        for v in candidates[depth]:
            trail = []
            ok = True
            for r in range(n):
                rg = _smul(mul, n, length, r, g)
                rv = _smul(mul, n, length, r, v)
                for i in base_known:
                    x = _vadd(add, n, length, rg, elems[i])
                    y = _vadd(add, n, length, rv, f[i])
                    j = pos[x]
                    cur = f[j]
                    if cur == -1:
                        if check_weights and weights[j] != _vweight(n, length, zero, y):
                            ok = False
                            break
                        if need_injective and y == zvec and x != zvec:
                            ok = False
                            break
                        f[j] = y
                        trail.append(j)
                        known.append(j)
                    elif cur != y:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                assign(depth + 1)
            for j in trail:
                f[j] = -1
            del known[len(base_known):]
        return

    assign(0)
    return out
