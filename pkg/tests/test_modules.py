"""FiniteModule: spans, simplicity, cyclicity, submodule lattices."""

import pytest

from frobring.construct import FpAlgebra, MatrixRing, ZMod, build_ring
from frobring.ideals import cyclic_left_ideal, socle_left
from frobring.modules import (FiniteModule, module_from_subset, peel_semisimple,
                              quotient_module, simple_iso_map,
                              simple_modules_isomorphic, submodule_as_module)

LOCAL8 = FpAlgebra(2, 3, ("1", "x", "y"), ())


def test_module_from_subset_and_axioms():
    z4 = build_ring(ZMod(4))
    mod = module_from_subset(z4, (0, 2), check=True)
    assert mod.size == 2 and mod.zero == 0
    assert mod.orbit(1) == (0, 1)
    assert mod.is_simple() and mod.is_cyclic()


def test_axiom_violations_detected():
    z4 = build_ring(ZMod(4))
    # a bogus action table: 1 acts as zero
    add = [0, 1, 1, 0]
    act = [0, 0] * 4
    with pytest.raises(ValueError):
        FiniteModule(z4, 2, add, act, 0, check=True)


def test_span_and_generators():
    local8 = build_ring(LOCAL8)
    soc = module_from_subset(local8, socle_left(local8).elements)
    assert soc.size == 4
    assert not soc.is_cyclic()               # 2-dimensional over the residue field
    assert soc.greedy_generators() == (1, 2)  # x and y as module elements
    assert soc.span((1,)) == (0, 1)
    assert len(soc.minimal_submodules()) == 3
    assert soc.socle() == (0, 1, 2, 3)


def test_quotient_module():
    z4 = build_ring(ZMod(4))
    top = quotient_module(z4, (0, 1, 2, 3), (0, 2))
    assert top.size == 2 and top.is_simple()


def test_all_submodules_and_covering():
    local8 = build_ring(LOCAL8)
    soc = module_from_subset(local8, socle_left(local8).elements)
    subs = soc.all_submodules()
    assert len(subs) == 5  # 0, three lines, the plane
    assert soc.covered_by_proper_submodules()  # union of the three lines
    z4mod = module_from_subset(build_ring(ZMod(4)), (0, 1, 2, 3))
    assert not z4mod.covered_by_proper_submodules()
    assert z4mod.is_cyclic()


def test_cyclic_iff_not_covered_for_small_modules(catalog):
    for name, ring in catalog:
        if ring.order > 16:
            continue
        mod = module_from_subset(ring, range(ring.order))
        assert mod.is_cyclic() == (not mod.covered_by_proper_submodules()), name


def test_simple_iso_map_is_module_iso():
    m2 = build_ring(MatrixRing(2, ZMod(2)))
    # two column-type minimal left ideals of M_2(F_2)
    col1 = module_from_subset(m2, cyclic_left_ideal(m2, 8).elements)
    col2 = module_from_subset(m2, cyclic_left_ideal(m2, 1).elements)
    assert simple_modules_isomorphic(col1, col2)
    iso = simple_iso_map(col1, col2)
    assert sorted(iso) == list(range(col1.size))
    assert len(set(iso.values())) == col1.size
    for r in range(16):
        for x in range(col1.size):
            assert iso[col1.act(r, x)] == col2.act(r, iso[x])


def test_peel_semisimple():
    local8 = build_ring(LOCAL8)
    soc = module_from_subset(local8, socle_left(local8).elements)
    peels, covered = peel_semisimple(soc)
    assert len(peels) == 2 and len(covered) == 4
    sub = submodule_as_module(soc, peels[0])
    assert sub.is_simple()
