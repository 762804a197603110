"""Independent brute-force oracles used by the test suite.

Everything here deliberately takes the dumbest correct route (naive
fixpoints, full subgroup enumeration) so it shares no code with the
implementations it checks.
"""


def units_by_pairs(ring):
    """Two-sided units by scanning every (u, v) pair."""
    n = ring.order
    out = set()
    for u in range(n):
        for v in range(n):
            if ring.mul(u, v) == ring.one and ring.mul(v, u) == ring.one:
                out.add(u)
    return out


def closure_by_passes(ring, seed):
    """Additive closure by repeated full passes until nothing changes."""
    current = set(seed) | {ring.zero}
    while True:
        nxt = set(current)
        for a in current:
            for b in current:
                nxt.add(ring.add(a, b))
        if nxt == current:
            return frozenset(current)
        current = nxt


def left_ideal_by_passes(ring, gens):
    current = set(gens) | {ring.zero}
    while True:
        nxt = set(current)
        for a in current:
            for b in current:
                nxt.add(ring.add(a, b))
            for r in range(ring.order):
                nxt.add(ring.mul(r, a))
        if nxt == current:
            return frozenset(current)
        current = nxt


def all_subgroups(ring):
    """Every subgroup of (R,+), by closure-extension search."""
    start = frozenset({ring.zero})
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for sub in frontier:
            for x in range(ring.order):
                if x in sub:
                    continue
                grown = closure_by_passes(ring, sub | {x})
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return sorted(seen, key=sorted)


def all_left_ideals_via_subgroups(ring):
    """Left ideals as the left-stable subgroups; independent of the lattice BFS."""
    n = ring.order
    out = []
    for sub in all_subgroups(ring):
        if all(ring.mul(r, x) in sub for x in sub for r in range(n)):
            out.append(tuple(sorted(sub)))
    return sorted(out)


def minimal_left_ideals_via_subgroups(ring):
    ideals = [set(i) for i in all_left_ideals_via_subgroups(ring) if len(i) > 1]
    return sorted(tuple(sorted(i)) for i in ideals
                  if not any(j < i for j in ideals))


def maximal_left_ideals_via_subgroups(ring):
    ideals = [set(i) for i in all_left_ideals_via_subgroups(ring)
              if len(i) < ring.order]
    return [tuple(sorted(i)) for i in ideals
            if not any(i < j for j in ideals)]


def radical_by_maximal_intersection(ring):
    out = set(range(ring.order))
    for ideal in maximal_left_ideals_via_subgroups(ring):
        out &= set(ideal)
    return tuple(sorted(out))


def sample_equal_kernel_pairs(ring, rng, count):
    """Equal-kernel pairs of module homs I -> R across the ideal lattice."""
    from frobring.ideals import all_left_ideals
    from frobring.injectivity import ideal_module_homs

    candidates = []
    for ideal in all_left_ideals(ring):
        if len(ideal) == 1:
            continue
        elements = list(ideal.elements)
        maps, slots = ideal_module_homs(ring, elements, injective_only=False)
        by_kernel = {}
        for fmap in maps:
            kernel = frozenset(x for x, v in zip(elements, fmap) if v == ring.zero)
            by_kernel.setdefault(kernel, []).append(fmap)
        for group in by_kernel.values():
            for g in group:
                for h in group:
                    candidates.append((tuple(elements), tuple(slots), tuple(g), tuple(h)))
    rng.shuffle(candidates)
    return candidates[:count]


def nilpotency_index(ring, elements):
    """Least k with (elements)^k = {0}, or None up to |R| factors."""
    current = set(elements)
    for k in range(1, ring.order + 1):
        if current == {ring.zero}:
            return k
        current = {ring.mul(a, b) for a in current for b in elements} | {ring.zero}
    return None
