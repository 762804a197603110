"""Codes, weight-preserving maps, monomial extension and its oracle."""

import random

import pytest

from frobring.codes import (Code, CodeHom, MonomialTransform, all_codes,
                            coordinate_kernels, exhaustive_extension_oracle,
                            extend_to_monomial, hamming_weight,
                            kernel_containment_holds, kernel_match,
                            search_counterexample, span_code, unit_between,
                            verify_macwilliams)
from frobring.construct import FpAlgebra, GaloisField, MatrixRing, ZMod, build_ring
from frobring.decomp import classify
from frobring.errors import CapExceeded

LOCAL8 = FpAlgebra(2, 3, ("1", "x", "y"), ())


def test_span_code_fixtures():
    z4 = build_ring(ZMod(4))
    code = span_code(z4, 2, [(1, 1)])
    assert code.elements == ((0, 0), (1, 1), (2, 2), (3, 3))
    assert span_code(z4, 3, []).elements == ((0, 0, 0),)
    local8 = build_ring(LOCAL8)
    assert span_code(local8, 1, [(2,)]).elements == ((0,), (2,))


def test_hamming_weight_fixtures():
    z4 = build_ring(ZMod(4))
    assert hamming_weight(z4, (0, 0, 0)) == 0
    assert hamming_weight(z4, (1, 0, 2)) == 2


def test_monomial_invariance():
    z4 = build_ring(ZMod(4))
    rng = random.Random(5)
    transforms = [MonomialTransform(z4, (1, 0), (1, 3)),
                  MonomialTransform(z4, (0, 1), (3, 3)),
                  MonomialTransform(z4, (1, 0), (3, 1))]
    for t in transforms:
        for _ in range(50):
            vec = (rng.randrange(4), rng.randrange(4))
            assert hamming_weight(z4, t.apply(vec)) == hamming_weight(z4, vec)


def test_monomial_validation():
    z4 = build_ring(ZMod(4))
    with pytest.raises(ValueError):
        MonomialTransform(z4, (0, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialTransform(z4, (0, 1), (1, 2))  # 2 is not a unit


def test_weight_preservation_fixtures():
    z4 = build_ring(ZMod(4))
    full = span_code(z4, 1, [(1,)])
    ident = CodeHom.from_generator_images(full, [(1,)])
    assert ident.is_weight_preserving()
    doubling = CodeHom.from_generator_images(full, [(2,)])
    assert doubling is not None
    assert not doubling.is_weight_preserving()  # w(2*2) = w(0) = 0 but w(2) = 1
    local8 = build_ring(LOCAL8)
    mx = span_code(local8, 1, [(2,)])
    x_to_y = CodeHom.from_generator_images(mx, [(4,)])
    assert x_to_y.is_weight_preserving() and x_to_y.is_injective()


def test_ill_defined_images_rejected():
    z4 = build_ring(ZMod(4))
    sub = span_code(z4, 1, [(2,)])
    # 2 has additive order 2, 1 has order 4: no hom sends 2 to 1
    assert CodeHom.from_generator_images(sub, [(1,)]) is None


def test_coordinate_kernels_fixtures():
    z4 = build_ring(ZMod(4))
    diag = span_code(z4, 2, [(1, 1)])
    ident = CodeHom.from_generator_images(diag, [(1, 1)])
    kernels = coordinate_kernels(ident)
    assert kernels[0] == kernels[1] == frozenset({(0, 0)})
    drop = CodeHom.from_generator_images(diag, [(1, 0)])
    kernels = coordinate_kernels(drop)
    assert kernels[0] == frozenset({(0, 0)})
    assert kernels[1] == frozenset(diag.elements)  # zero column


def test_kernel_match_fixtures():
    z4 = build_ring(ZMod(4))
    code = span_code(z4, 2, [(1, 2)])
    ident = CodeHom.from_generator_images(code, [(1, 2)])
    assert kernel_match(ident, ident) == (0, 0)
    swap = CodeHom.from_generator_images(code, [(2, 1)])
    assert kernel_match(ident, swap) == (0, 1)
    assert kernel_containment_holds(ident, swap)


def test_kernel_match_on_weight_equal_pairs_over_embedding_ring():
    # Every weight-equal pair over a socle-embedding ring admits a kernel
    # match, and the containment property holds.
    z4 = build_ring(ZMod(4))
    assert classify(z4).socle_embeds_left
    codes = all_codes(z4, 2, 16)
    rng = random.Random(11)
    pairs = 0
    for code in codes:
        homs = _all_weight_preserving_homs(code)
        for phi in homs:
            for psi in homs:
                pairs += 1
                assert kernel_match(phi, psi) is not None, (code.elements,)
                assert kernel_containment_holds(phi, psi)
    assert pairs > 50


def _all_weight_preserving_homs(code):
    from frobring import kernels as K
    ring = code.ring
    n, length = ring.order, code.length
    by_weight = {}
    for enc in range(n ** length):
        from frobring.codes import decode_vector
        vec = decode_vector(ring, enc, length)
        by_weight.setdefault(hamming_weight(ring, vec), []).append(enc)
    gens = code.minimal_generators()
    slots = [code.elements.index(g) for g in gens]
    cands = [by_weight.get(hamming_weight(ring, g), []) for g in gens]
    from frobring.codes import encode_vector, decode_vector, _image_code
    elems = [encode_vector(ring, e) for e in code.elements]
    maps = K.linear_maps(ring.add_table, ring.mul_table, n, length, elems,
                         slots, cands, ring.zero, True, True)
    out = []
    for fmap in maps:
        mapping = {code.elements[i]: decode_vector(ring, v, length)
                   for i, v in enumerate(fmap)}
        out.append(CodeHom(code, _image_code(code, mapping), mapping))
    return out


def test_unit_between_fixtures():
    z4 = build_ring(ZMod(4))
    code = span_code(z4, 1, [(2,)])
    gens = code.minimal_generators()
    # g = h = inclusion of {0,2}: both 1 and 3 satisfy 2u = 2; least returned
    u = unit_between(z4, gens, lambda v: v[0], lambda v: v[0])
    assert u == 1
    assert z4.mul(2, 3) == 2  # 3 would work too
    local8 = build_ring(LOCAL8)
    mx = span_code(local8, 1, [(2,)])
    u = unit_between(local8, mx.minimal_generators(),
                     lambda v: v[0], lambda v: {0: 0, 2: 4}[v[0]])
    assert u is None  # xu stays in {0, x} for every unit u


def test_extension_fixtures():
    z4 = build_ring(ZMod(4))
    code = span_code(z4, 1, [(2,)])
    ident = CodeHom.from_generator_images(code, [(2,)])
    t = extend_to_monomial(ident)
    assert t is not None and t.sigma == (0,) and t.units == (1,)

    diag = span_code(z4, 2, [(1, 1)])
    incl = CodeHom.from_generator_images(diag, [(1, 1)])
    t = extend_to_monomial(incl)
    assert t == MonomialTransform(z4, (0, 1), (1, 1))

    local8 = build_ring(LOCAL8)
    mx = span_code(local8, 1, [(2,)])
    x_to_y = CodeHom.from_generator_images(mx, [(4,)])
    assert extend_to_monomial(x_to_y) is None
    assert exhaustive_extension_oracle(x_to_y) is None


def test_extension_requires_weight_preservation():
    z4 = build_ring(ZMod(4))
    full = span_code(z4, 1, [(1,)])
    doubling = CodeHom.from_generator_images(full, [(2,)])
    with pytest.raises(ValueError):
        extend_to_monomial(doubling)


def test_nontrivial_extension_found():
    z4 = build_ring(ZMod(4))
    code = span_code(z4, 2, [(1, 2)])
    swap_scale = CodeHom.from_generator_images(code, [(2, 3)])
    assert swap_scale.is_weight_preserving()
    t = extend_to_monomial(swap_scale)
    o = exhaustive_extension_oracle(swap_scale)
    assert t is not None and o is not None
    assert t.agrees_with(swap_scale) and o.agrees_with(swap_scale)


def test_oracle_cap():
    m2 = build_ring(MatrixRing(2, ZMod(2)))
    code = span_code(m2, 3, [(9, 9, 9)], size_cap=4096)
    hom = CodeHom.from_generator_images(code, list(code.minimal_generators()))
    with pytest.raises(CapExceeded):
        exhaustive_extension_oracle(hom, cap=100)  # 3! * 6^3 = 1296 > 100


def test_verify_macwilliams_fixtures():
    z4 = build_ring(ZMod(4))
    report = verify_macwilliams(z4, 2, 16)
    assert report.holds and report.codes_checked == 15
    assert report.oracle_runs == report.homs_checked > 0

    local8 = build_ring(LOCAL8)
    report = verify_macwilliams(local8, 1, 8)
    assert not report.holds
    domain, image, graph = report.counterexample
    assert domain == ((0,), (2,))      # {0, x}
    assert image == ((0,), (4,))       # {0, y}
    assert graph == (((0,), (0,)), ((2,), (4,)))

    m2 = build_ring(MatrixRing(2, ZMod(2)))
    report = verify_macwilliams(m2, 1, 16)
    assert report.holds


def test_search_counterexample_fixtures():
    local8 = build_ring(LOCAL8)
    found, reports = search_counterexample(local8, 2, 8)
    assert found is not None and found.length == 1
    assert found.counterexample[0] == ((0,), (2,))

    z4 = build_ring(ZMod(4))
    found, reports = search_counterexample(z4, 2, 16)
    assert found is None and len(reports) == 2

    zero = build_ring(ZMod(1))
    found, reports = search_counterexample(zero, 2, 4)
    assert found is None


def test_counterexample_hom_is_verified_weight_preserving():
    local8 = build_ring(LOCAL8)
    report = verify_macwilliams(local8, 1, 8)
    domain, image, graph = report.counterexample
    code = span_code(local8, 1, list(domain))
    hom = CodeHom(code, span_code(local8, 1, list(image)), dict(graph))
    assert hom.is_weight_preserving() and hom.is_injective()
    assert extend_to_monomial(hom) is None
    assert exhaustive_extension_oracle(hom) is None


def test_all_codes_deterministic_and_sorted():
    z4 = build_ring(ZMod(4))
    codes = all_codes(z4, 2, 16)
    keys = [c.elements for c in codes]
    assert keys == sorted(keys)
    assert codes == all_codes(z4, 2, 16)
