# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twin of frobring._kernels_py; see that module for the contract.

Semantics (including output order) must match the pure versions exactly;
tests/test_kernels.py enforces parity.
"""

from cpython cimport array
from libc.stdlib cimport qsort

import array as _array

cdef array.array _INT = _array.array('i', [])
cdef array.array _UINT = _array.array('I', [])
cdef array.array _LL = _array.array('q', [])


cdef array.array _as_ints(table):
    if isinstance(table, _array.array) and (<array.array>table).typecode == 'i':
        return <array.array>table
    return _array.array('i', table)


cdef int _cmp_int(const void* a, const void* b) noexcept nogil:
    cdef int x = (<const int*>a)[0]
    cdef int y = (<const int*>b)[0]
    return (x > y) - (x < y)


cdef int _cmp_ll(const void* a, const void* b) noexcept nogil:
    cdef long long x = (<const long long*>a)[0]
    cdef long long y = (<const long long*>b)[0]
    return (x > y) - (x < y)


def ring_law_violation(table_add, table_mul, int n, int zero, int one, triples=None):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef int x, y, z, row, found
    cdef long long t, count, rest
    cdef array.array tri_a
    cdef int* tri = NULL
    for x in range(n):
        if add[x * n + zero] != x or add[zero * n + x] != x:
            return 3
        if mul[x * n + one] != x or mul[one * n + x] != x:
            return 6
        if mul[x * n + zero] != zero or mul[zero * n + x] != zero:
            return 9
        row = x * n
        found = 0
        for y in range(n):
            if add[row + y] == zero:
                found = 1
                break
        if not found:
            return 4
        for y in range(n):
            if add[row + y] != add[y * n + x]:
                return 1
    if triples is None:
        count = (<long long>n) * n * n
    else:
        tri_a = _as_ints(triples)
        tri = tri_a.data.as_ints
        count = len(triples) // 3
    for t in range(count):
        if tri == NULL:
            x = <int>(t // (n * n))
            rest = t % (n * n)
            y = <int>(rest // n)
            z = <int>(rest % n)
        else:
            x = tri[3 * t]
            y = tri[3 * t + 1]
            z = tri[3 * t + 2]
        if add[add[x * n + y] * n + z] != add[x * n + add[y * n + z]]:
            return 2
        if mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]]:
            return 5
        if mul[x * n + add[y * n + z]] != add[mul[x * n + y] * n + mul[x * n + z]]:
            return 7
        if mul[add[x * n + y] * n + z] != add[mul[x * n + z] * n + mul[y * n + z]]:
            return 8
    return 0


cdef int _closure_into(int* add, int n, unsigned char* member, int* elems,
                       int* stack, int cnt, int top) noexcept:
    # closes elems[0:cnt] (unprocessed tail in stack[0:top]) under addition;
    # returns the final count
    cdef int x, base, i, snap, z
    while top > 0:
        top -= 1
        x = stack[top]
        base = x * n
        snap = cnt
        for i in range(snap):
            z = add[base + elems[i]]
            if not member[z]:
                member[z] = 1
                elems[cnt] = z
                cnt += 1
                stack[top] = z
                top += 1
    return cnt


def additive_closure(table_add, int n, int zero, seeds):
    cdef array.array add_a = _as_ints(table_add)
    cdef int* add = add_a.data.as_ints
    cdef array.array elems_a = array.clone(_INT, n, zero=False)
    cdef array.array stack_a = array.clone(_INT, n, zero=False)
    cdef int* elems = elems_a.data.as_ints
    cdef int* stack = stack_a.data.as_ints
    cdef bytearray member_b = bytearray(n)
    cdef unsigned char* member = member_b
    cdef int cnt = 0, top = 0, s, i
    member[zero] = 1
    elems[cnt] = zero
    cnt += 1
    for sv in seeds:
        s = sv
        if not member[s]:
            member[s] = 1
            elems[cnt] = s
            cnt += 1
            stack[top] = s
            top += 1
    cnt = _closure_into(add, n, member, elems, stack, cnt, top)
    qsort(elems, cnt, sizeof(int), _cmp_int)
    return [elems[i] for i in range(cnt)]


def left_span(table_add, table_mul, int n, int zero, gens):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef array.array elems_a = array.clone(_INT, n, zero=False)
    cdef array.array stack_a = array.clone(_INT, n, zero=False)
    cdef int* elems = elems_a.data.as_ints
    cdef int* stack = stack_a.data.as_ints
    cdef bytearray member_b = bytearray(n)
    cdef unsigned char* member = member_b
    cdef int cnt = 0, top = 0, g, r, s, i
    member[zero] = 1
    elems[cnt] = zero
    cnt += 1
    for gv in gens:
        g = gv
        for r in range(n):
            s = mul[r * n + g]
            if not member[s]:
                member[s] = 1
                elems[cnt] = s
                cnt += 1
                stack[top] = s
                top += 1
    cnt = _closure_into(add, n, member, elems, stack, cnt, top)
    qsort(elems, cnt, sizeof(int), _cmp_int)
    return [elems[i] for i in range(cnt)]


def unit_mask(table_mul, int n, int one):
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* mul = mul_a.data.as_ints
    cdef bytearray out = bytearray(n)
    cdef unsigned char* mask = out
    cdef int u, v, base
    for u in range(n):
        base = u * n
        for v in range(n):
            if mul[base + v] == one and mul[v * n + u] == one:
                mask[u] = 1
                break
    return out


def quasiregular_mask(table_add, table_mul, int n, int one, neg, units):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef array.array neg_a = _as_ints(neg)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef int* negp = neg_a.data.as_ints
    cdef const unsigned char[::1] um = units
    cdef bytearray out = bytearray(n)
    cdef unsigned char* mask = out
    cdef int x, r, t, onerow = one * n, ok
    for x in range(n):
        ok = 1
        for r in range(n):
            t = mul[r * n + x]
            if not um[add[onerow + negp[t]]]:
                ok = 0
                break
        mask[x] = ok
    return out


cdef long long _smul_c(int* mul, int n, int length, long long* pw,
                       int r, long long enc) noexcept:
    cdef long long out = 0
    cdef int k, d
    cdef int rbase = r * n
    for k in range(length):
        d = <int>(enc // pw[k])
        enc = enc % pw[k]
        out = out * n + mul[rbase + d]
    return out


cdef long long _vadd_c(int* add, int n, int length, long long* pw,
                       long long a, long long b) noexcept:
    cdef long long out = 0
    cdef int k, da, db
    for k in range(length):
        da = <int>(a // pw[k])
        a = a % pw[k]
        db = <int>(b // pw[k])
        b = b % pw[k]
        out = out * n + add[da * n + db]
    return out


cdef int _vweight_c(int n, int length, int zero, long long enc) noexcept:
    cdef int c = 0, k
    for k in range(length):
        if enc % n != zero:
            c += 1
        enc = enc // n
    return c


cdef void _fill_powers(int n, int length, long long* pw) noexcept:
    cdef int k
    pw[length - 1] = 1
    for k in range(length - 2, -1, -1):
        pw[k] = pw[k + 1] * n


cdef long long _code_closure(int* add, int n, int length, long long* pw,
                             unsigned int* stamp, unsigned int gen,
                             long long* elems, long long* stack,
                             long long cnt, long long top,
                             long long abort_above) noexcept:
    # closes elems[0:cnt] under vector addition; returns the final count,
    # or -1 once the count exceeds abort_above
    cdef long long x, i, snap, z
    while top > 0:
        top -= 1
        x = stack[top]
        snap = cnt
        for i in range(snap):
            z = _vadd_c(add, n, length, pw, x, elems[i])
            if stamp[z] != gen:
                stamp[z] = gen
                elems[cnt] = z
                cnt += 1
                if cnt > abort_above:
                    return -1
                stack[top] = z
                top += 1
    return cnt


def code_span(table_add, table_mul, int n, int length, int zero, gens):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef long long pw[16]
    _fill_powers(n, length, pw)
    cdef long long total = pw[0] * n
    cdef array.array stamp_a = array.clone(_UINT, total, zero=True)
    cdef unsigned int* stamp = stamp_a.data.as_uints
    cdef array.array elems_a = array.clone(_LL, total, zero=False)
    cdef array.array stack_a = array.clone(_LL, total, zero=False)
    cdef long long* elems = elems_a.data.as_longlongs
    cdef long long* stack = stack_a.data.as_longlongs
    cdef long long zvec = 0, cnt = 0, top = 0, s, g, i
    cdef int k, r
    for k in range(length):
        zvec = zvec * n + zero
    stamp[zvec] = 1
    elems[cnt] = zvec
    cnt += 1
    seeds = set()
    for gv in gens:
        g = gv
        for r in range(n):
            seeds.add(_smul_c(mul, n, length, pw, r, g))
    for sv in sorted(seeds):
        s = sv
        if stamp[s] != 1:
            stamp[s] = 1
            elems[cnt] = s
            cnt += 1
            stack[top] = s
            top += 1
    cnt = _code_closure(add, n, length, pw, stamp, 1, elems, stack, cnt, top, total)
    qsort(elems, cnt, sizeof(long long), _cmp_ll)
    return [elems[i] for i in range(cnt)]


def code_lattice(table_add, table_mul, int n, int length, int zero,
                 int size_cap, int count_cap):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef long long pw[16]
    _fill_powers(n, length, pw)
    cdef long long total = pw[0] * n
    cdef array.array stamp_a = array.clone(_UINT, total, zero=True)
    cdef unsigned int* stamp = stamp_a.data.as_uints
    cdef long long buf_len = size_cap + n + 4
    if buf_len > total + 1:
        buf_len = total + 1
    cdef array.array elems_a = array.clone(_LL, buf_len, zero=False)
    cdef array.array stack_a = array.clone(_LL, buf_len, zero=False)
    cdef long long* elems = elems_a.data.as_longlongs
    cdef long long* stack = stack_a.data.as_longlongs
    cdef unsigned int gen = 0
    cdef long long zvec = 0, v, cnt, top, s, i, code_len
    cdef int k, r
    for k in range(length):
        zvec = zvec * n + zero
    start = (zvec,)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for code in frontier:
            code_len = len(code)
            for v in range(total):
                gen += 1
                cnt = 0
                for i in range(code_len):
                    s = code[i]
                    stamp[s] = gen
                    elems[cnt] = s
                    cnt += 1
                if stamp[v] == gen:
                    continue
                top = 0
                for r in range(n):
                    s = _smul_c(mul, n, length, pw, r, v)
                    if stamp[s] != gen:
                        stamp[s] = gen
                        elems[cnt] = s
                        cnt += 1
                        stack[top] = s
                        top += 1
                cnt = _code_closure(add, n, length, pw, stamp, gen,
                                    elems, stack, cnt, top, size_cap)
                if cnt < 0 or cnt > size_cap:
                    continue
                qsort(elems, cnt, sizeof(long long), _cmp_ll)
                key = tuple([elems[i] for i in range(cnt)])
                if key not in seen:
                    seen.add(key)
                    if len(seen) > count_cap:
                        raise RuntimeError("cap")
                    nxt.append(key)
        frontier = nxt
    return sorted(seen)


def linear_maps(table_add, table_mul, int n, int length, elems, gen_slots,
                candidates, int zero, bint check_weights, bint need_injective):
    cdef array.array add_a = _as_ints(table_add)
    cdef array.array mul_a = _as_ints(table_mul)
    cdef int* add = add_a.data.as_ints
    cdef int* mul = mul_a.data.as_ints
    cdef long long pw[16]
    _fill_powers(n, length, pw)
    cdef long long total = pw[0] * n
    cdef int m = len(elems)
    cdef int depth_max = len(gen_slots)

    cdef array.array el_a = array.clone(_LL, m, zero=False)
    cdef long long* el = el_a.data.as_longlongs
    cdef array.array pos_a = array.clone(_INT, total, zero=False)
    cdef int* pos = pos_a.data.as_ints
    cdef long long i
    for i in range(total):
        pos[i] = -1
    cdef int j
    for j in range(m):
        el[j] = elems[j]
        pos[el[j]] = j

    cdef array.array w_a = array.clone(_INT, m, zero=True)
    cdef int* wt = w_a.data.as_ints
    if check_weights:
        for j in range(m):
            wt[j] = _vweight_c(n, length, zero, el[j])

    cdef array.array f_a = array.clone(_LL, m, zero=False)
    cdef long long* f = f_a.data.as_longlongs
    for j in range(m):
        f[j] = -1
    cdef array.array known_a = array.clone(_INT, m, zero=False)
    cdef int* known = known_a.data.as_ints
    cdef array.array trail_a = array.clone(_INT, (depth_max + 1) * m, zero=False)
    cdef int* trail = trail_a.data.as_ints
    cdef array.array gs_a = array.clone(_INT, depth_max + 1, zero=False)
    cdef int* gs = gs_a.data.as_ints
    for j in range(depth_max):
        gs[j] = gen_slots[j]

    cdef long long zvec = 0
    cdef int k
    for k in range(length):
        zvec = zvec * n + zero
    f[pos[zvec]] = zvec
    known[0] = pos[zvec]
    cdef int known_cnt = 1

    out = []
    _assign(0, depth_max, add, mul, n, length, pw, el, pos, wt, f, known,
            &known_cnt, trail, m, gs, candidates, zvec, zero,
            check_weights, need_injective, out)
    return out


cdef void _assign(int depth, int depth_max, int* add, int* mul, int n,
                  int length, long long* pw, long long* el, int* pos,
                  int* wt, long long* f, int* known, int* known_cnt,
                  int* trail, int m, int* gs, list candidates,
                  long long zvec, int zero, bint check_weights,
                  bint need_injective, list out):
    cdef int i, jj, r, tcnt, base_cnt
    cdef long long g, v, rg, rv, x, y, cur
    cdef bint ok
    if depth == depth_max:
        out.append([f[i] for i in range(m)])
        return
    g = el[gs[depth]]
    base_cnt = known_cnt[0]
    cdef int* my_trail = trail + depth * m
    for cand in candidates[depth]:
        v = cand
        tcnt = 0
        ok = True
        for r in range(n):
            rg = _smul_c(mul, n, length, pw, r, g)
            rv = _smul_c(mul, n, length, pw, r, v)
            for i in range(base_cnt):
                x = _vadd_c(add, n, length, pw, rg, el[known[i]])
                y = _vadd_c(add, n, length, pw, rv, f[known[i]])
                jj = pos[x]
                cur = f[jj]
                if cur == -1:
                    if check_weights and wt[jj] != _vweight_c(n, length, zero, y):
                        ok = False
                        break
                    if need_injective and y == zvec and x != zvec:
                        ok = False
                        break
                    f[jj] = y
                    my_trail[tcnt] = jj
                    tcnt += 1
                    known[known_cnt[0]] = jj
                    known_cnt[0] += 1
                elif cur != y:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            _assign(depth + 1, depth_max, add, mul, n, length, pw, el, pos,
                    wt, f, known, known_cnt, trail, m, gs, candidates, zvec,
                    zero, check_weights, need_injective, out)
        for i in range(tcnt):
            f[my_trail[i]] = -1
        known_cnt[0] = base_cnt
