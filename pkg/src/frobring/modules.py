"""Explicit finite left modules over a FiniteRing.

A module is a table pair: addition on module elements 0..m-1 and the
ring action as an n-by-m table.  Right modules are handled throughout
the package as left modules over the opposite ring.
"""

from .errors import CapExceeded


class FiniteModule:
    def __init__(self, ring, size, add, act, zero, labels=None, check=True):
        self.ring = ring
        self.size = size
        self.add_table = list(add)
        self.act_table = list(act)
        self.zero = zero
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))
        if check:
            self._verify()

    def __repr__(self):
        return f"<module of size {self.size} over {self.ring.name}>"

    def add(self, x, y):
        return self.add_table[x * self.size + y]

    def act(self, r, x):
        return self.act_table[r * self.size + x]

    def label(self, x):
        return self.labels[x]

    def _verify(self):
        R, m = self.ring, self.size
        for x in range(m):
            if self.add(self.zero, x) != x:
                raise ValueError("module zero is not neutral")
            if self.act(R.one, x) != x:
                raise ValueError("ring identity does not act as identity")
            if self.act(R.zero, x) != self.zero:
                raise ValueError("ring zero does not annihilate")
        for r in range(R.order):
            for s in range(R.order):
                for x in range(m):
                    if self.act(r, self.act(s, x)) != self.act(R.mul(r, s), x):
                        raise ValueError("action is not associative over ring multiplication")
                    if self.act(R.add(r, s), x) != self.add(self.act(r, x), self.act(s, x)):
                        raise ValueError("action is not additive in the scalar")
            for x in range(m):
                for y in range(m):
                    if self.act(r, self.add(x, y)) != self.add(self.act(r, x), self.act(r, y)):
                        raise ValueError("action does not distribute over module addition")

    # ---- submodule machinery ----

    def orbit(self, x):
        """Rx as a sorted tuple; orbits are closed under addition."""
        return tuple(sorted({self.act(r, x) for r in range(self.ring.order)}))

    def span(self, gens):
        member = {self.zero}
        elems = [self.zero]
        stack = []
        for g in gens:
            for r in range(self.ring.order):
                s = self.act(r, g)
                if s not in member:
                    member.add(s)
                    elems.append(s)
                    stack.append(s)
        while stack:
            x = stack.pop()
            for y in list(elems):
                z = self.add(x, y)
                if z not in member:
                    member.add(z)
                    elems.append(z)
                    stack.append(z)
        return tuple(sorted(elems))

    def greedy_generators(self, subset=None):
        """Generating set built by repeatedly adding the least element not spanned."""
        target = tuple(sorted(subset)) if subset is not None else tuple(range(self.size))
        gens = []
        spanned = {self.zero}
        for x in target:
            if x not in spanned:
                gens.append(x)
                spanned = set(self.span(gens))
        return tuple(gens)

    def is_cyclic(self):
        full = tuple(range(self.size))
        return any(self.span((x,)) == full for x in range(self.size))

    def minimal_submodules(self):
        seen = {}
        for x in range(self.size):
            if x == self.zero:
                continue
            sub = self.span((x,))
            if sub in seen:
                continue
            if all(self.span((y,)) == sub for y in sub if y != self.zero):
                seen[sub] = True
        return sorted(seen)

    def socle(self):
        seeds = [x for sub in self.minimal_submodules() for x in sub]
        return self.span(seeds) if seeds else (self.zero,)

    def is_simple(self):
        if self.size == 1:
            return False
        full = tuple(range(self.size))
        return all(self.span((x,)) == full for x in range(self.size) if x != self.zero)

    def all_submodules(self, count_cap=20000):
        start = (self.zero,)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for sub in frontier:
                sset = set(sub)
                for v in range(self.size):
                    if v in sset:
                        continue
                    grown = self.span(tuple(sub) + (v,))
                    if grown not in seen:
                        seen.add(grown)
                        if len(seen) > count_cap:
                            raise CapExceeded("submodule lattice exceeds cap")
                        nxt.append(grown)
            frontier = nxt
        return sorted(seen)

    def maximal_proper_submodules(self, count_cap=20000):
        subs = [s for s in self.all_submodules(count_cap) if len(s) < self.size]
        return [s for s in subs
                if not any(s is not t and set(s) < set(t) for t in subs)]

    def covered_by_proper_submodules(self, count_cap=20000):
        """Whether the maximal proper submodules cover every element."""
        covered = set()
        for s in self.maximal_proper_submodules(count_cap):
            covered |= set(s)
        return len(covered) == self.size

    def annihilator(self, x):
        return frozenset(r for r in range(self.ring.order)
                         if self.act(r, x) == self.zero)


def module_from_subset(ring, subset, labels=None, check=False):
    """Module structure on an additively closed, action-stable subset of R."""
    elems = tuple(sorted(subset))
    index = {e: i for i, e in enumerate(elems)}
    m = len(elems)
    add = [index[ring.add(a, b)] for a in elems for b in elems]
    act = [index[ring.mul(r, a)] for r in range(ring.order) for a in elems]
    if labels is None:
        labels = [ring.label(e) for e in elems]
    return FiniteModule(ring, m, add, act, index[ring.zero], labels, check=check)


def submodule_as_module(M, subset, check=False):
    """Module structure on an action-stable, additively closed subset of M."""
    elems = tuple(sorted(subset))
    index = {e: i for i, e in enumerate(elems)}
    add = [index[M.add(a, b)] for a in elems for b in elems]
    act = [index[M.act(r, a)] for r in range(M.ring.order) for a in elems]
    labels = [M.label(e) for e in elems]
    return FiniteModule(M.ring, len(elems), add, act, index[M.zero], labels, check=check)


def quotient_module(ring, big, sub, check=False):
    """The module big/sub for submodule subsets sub <= big of R.

    Coset representatives are the least element per coset.
    """
    big = tuple(sorted(big))
    subset = frozenset(sub)
    rep = {}
    for x in big:
        if x not in rep:
            coset = sorted(ring.add(x, s) for s in subset)
            for y in coset:
                rep[y] = coset[0]
    reps = sorted(set(rep.values()))
    index = {r: i for i, r in enumerate(reps)}
    add = [index[rep[ring.add(a, b)]] for a in reps for b in reps]
    act = [index[rep[ring.mul(r, a)]] for r in range(ring.order) for a in reps]
    labels = [ring.label(r) for r in reps]
    return FiniteModule(ring, len(reps), add, act, index[rep[ring.zero]],
                        labels, check=check)


def simple_modules_isomorphic(M, N):
    """Isomorphism test for simple modules over the same ring.

    Picks the least nonzero generator m of M and scans N for n with
    ann(m) <= ann(n) and Rn = N; by simplicity and equal cardinality
    such an n induces an isomorphism.
    """
    if M.ring is not N.ring:
        raise ValueError("modules over different rings")
    if M.size != N.size:
        return False
    m = next(x for x in range(M.size) if x != M.zero)
    full = tuple(range(N.size))
    ann_m = M.annihilator(m)
    for n in range(N.size):
        if n == N.zero:
            continue
        if ann_m <= N.annihilator(n) and N.span((n,)) == full:
            return True
    return False


def simple_iso_map(M, N):
    """Explicit isomorphism dict {x -> image} between isomorphic simple modules."""
    m = next(x for x in range(M.size) if x != M.zero)
    full = tuple(range(N.size))
    ann_m = M.annihilator(m)
    for n in range(N.size):
        if n == N.zero:
            continue
        if ann_m <= N.annihilator(n) and N.span((n,)) == full:
            out = {}
            for r in range(M.ring.order):
                out[M.act(r, m)] = N.act(r, n)
            return out
    raise ValueError("modules are not isomorphic")


def peel_semisimple(M):
    """Greedy direct-sum decomposition of a semisimple module.

    Returns the list of peeled minimal submodules (element tuples) in
    lexicographic order; their internal direct sum is the socle of M.
    """
    peeled = []
    current = {M.zero}
    for sub in M.minimal_submodules():
        if not set(sub) <= current:
            peeled.append(sub)
            current = set(M.span(tuple(current) + sub))
    return peeled, tuple(sorted(current))
