"""Ideal machinery: spans, minimal ideals, radical, socle, quotients."""

import pytest

from oracles import (all_left_ideals_via_subgroups, left_ideal_by_passes,
                     minimal_left_ideals_via_subgroups, nilpotency_index,
                     radical_by_maximal_intersection)
from frobring.construct import FpAlgebra, MatrixRing, ZMod, build_ring
from frobring.errors import NotARing
from frobring.ideals import (all_left_ideals, cyclic_left_ideal,
                             is_left_ideal, is_right_ideal,
                             minimal_left_ideals, minimal_right_ideals,
                             quotient_ring, radical,
                             radical_via_maximal_left_ideals,
                             right_annihilator, socle_left, socle_right,
                             span_left)

LOCAL8 = FpAlgebra(2, 3, ("1", "x", "y"), ())


def test_cyclic_ideal_fixtures():
    z4 = build_ring(ZMod(4))
    assert cyclic_left_ideal(z4, 2).elements == (0, 2)
    assert cyclic_left_ideal(z4, 1).elements == (0, 1, 2, 3)
    local8 = build_ring(LOCAL8)
    assert cyclic_left_ideal(local8, 2).elements == (0, 2)  # Rx = {0, x}


def test_span_fixtures():
    z6 = build_ring(ZMod(6))
    assert span_left(z6, [2]).elements == (0, 2, 4)
    assert span_left(z6, []).elements == (0,)
    local8 = build_ring(LOCAL8)
    assert span_left(local8, [2, 4]).elements == (0, 2, 4, 6)


def test_span_matches_naive_oracle(catalog):
    for name, ring in catalog:
        if ring.order > 16:
            continue
        for gens in ([], [ring.order - 1], [1, ring.order // 2]):
            got = span_left(ring, gens)
            assert frozenset(got.elements) == left_ideal_by_passes(ring, gens), name


def test_minimal_ideal_fixtures():
    assert [i.elements for i in minimal_left_ideals(build_ring(ZMod(4)))] == [(0, 2)]
    assert [i.elements for i in minimal_left_ideals(build_ring(ZMod(6)))] == \
        [(0, 2, 4), (0, 3)]
    assert [i.elements for i in minimal_left_ideals(build_ring(LOCAL8))] == \
        [(0, 2), (0, 4), (0, 6)]


def test_minimal_ideals_match_subgroup_oracle(catalog):
    for name, ring in catalog:
        if ring.order > 16:
            continue
        got = [i.elements for i in minimal_left_ideals(ring)]
        assert got == minimal_left_ideals_via_subgroups(ring), name


def test_radical_fixtures():
    assert radical(build_ring(ZMod(4))).elements == (0, 2)
    assert radical(build_ring(ZMod(6))).elements == (0,)
    assert radical(build_ring(LOCAL8)).elements == (0, 2, 4, 6)


def test_radical_agrees_with_maximal_ideal_oracles(catalog):
    for name, ring in catalog:
        rad = radical(ring).elements
        assert rad == radical_via_maximal_left_ideals(ring), name
        if ring.order <= 16:
            assert rad == radical_by_maximal_intersection(ring), name


def test_radical_is_nilpotent(catalog):
    for name, ring in catalog:
        k = nilpotency_index(ring, radical(ring).elements)
        assert k is not None and k <= ring.order, name


def test_radical_of_quotient_is_zero(catalog):
    for name, ring in catalog:
        quotient, _ = quotient_ring(ring, radical(ring))
        assert radical(quotient).elements == (quotient.zero,), name


def test_socle_fixtures():
    assert socle_left(build_ring(ZMod(4))).elements == (0, 2)
    z6 = build_ring(ZMod(6))
    assert socle_left(z6).elements == tuple(range(6))  # semisimple: soc = R
    assert socle_left(build_ring(LOCAL8)).elements == (0, 2, 4, 6)


def test_socle_is_annihilator_of_radical(catalog):
    # soc(_RR) = {x : rad*x = 0} for finite rings
    for name, ring in catalog:
        rad = radical(ring)
        assert socle_left(ring).elements == right_annihilator(ring, rad.elements), name
        assert socle_left(ring).finitary, name


def test_socle_right_via_opposite():
    t2 = build_ring(FpAlgebra(2, 3, ("1", "a", "b"), ((1, 1, 1, 1), (1, 2, 2, 1))))
    # left socle {0, a, b, a+b}; right socle {0, 1+a, b, 1+a+b}
    assert socle_left(t2).elements == (0, 2, 4, 6)
    assert socle_right(t2).elements == (0, 3, 4, 7)
    assert [i.elements for i in minimal_right_ideals(t2)] == [(0, 3), (0, 4), (0, 7)]


def test_ideal_sidedness_checks():
    t2 = build_ring(FpAlgebra(2, 3, ("1", "a", "b"), ((1, 1, 1, 1), (1, 2, 2, 1))))
    assert is_left_ideal(t2, {0, 2})          # Ra = {0, a}
    assert not is_right_ideal(t2, {0, 2})     # aT contains b
    assert is_right_ideal(t2, {0, 3})         # (1+a)T
    assert is_left_ideal(t2, set(radical(t2).elements))
    assert is_right_ideal(t2, set(radical(t2).elements))


def test_all_left_ideals_matches_subgroup_oracle(catalog):
    for name, ring in catalog:
        if ring.order > 16:
            continue
        got = [i.elements for i in all_left_ideals(ring)]
        assert got == all_left_ideals_via_subgroups(ring), name


def test_quotient_fixtures():
    z4 = build_ring(ZMod(4))
    q, proj = quotient_ring(z4, radical(z4))
    assert q.order == 2 and proj[2] == proj[0] and proj[1] == proj[3]
    local8 = build_ring(LOCAL8)
    q, _ = quotient_ring(local8, radical(local8))
    assert q.order == 2
    from frobring.ideals import TwoSidedIdeal
    r, proj = quotient_ring(z4, TwoSidedIdeal(z4, (0,)))
    assert r.order == 4 and proj == [0, 1, 2, 3]


def test_quotient_requires_two_sided():
    t2 = build_ring(FpAlgebra(2, 3, ("1", "a", "b"), ((1, 1, 1, 1), (1, 2, 2, 1))))
    from frobring.ideals import LeftIdeal
    with pytest.raises(NotARing):
        quotient_ring(t2, LeftIdeal(t2, (0, 2)))  # Ra is not right-stable


def test_matrix_ring_has_no_proper_two_sided_ideal():
    m2 = build_ring(MatrixRing(2, ZMod(2)))
    assert radical(m2).elements == (0,)
    proper = [i for i in all_left_ideals(m2) if 1 < len(i) < 16]
    assert len(proper) == 3  # the three column-type left ideals
    assert all(not is_right_ideal(m2, i.as_set()) for i in proper)
