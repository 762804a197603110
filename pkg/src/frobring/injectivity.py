"""Pseudo-injectivity of finite rings.

A ring is left pseudo-injective when every injective left-module
homomorphism from a left ideal into the ring is a right multiplication.
The test enumerates the whole left-ideal lattice and, per ideal, all
injective module homomorphisms into R by generator images.
"""

from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded
from .ideals import all_left_ideals, span_left

HOM_CAP = 10 ** 6


@dataclass(frozen=True)
class PseudoInjectivityReport:
    side: str
    verdict: bool          # meaningful only when known is True
    known: bool            # False when a cap was hit (verdict Unknown)
    witness: tuple = None  # (ideal elements, hom graph) for a False verdict
    detail: str = ""


def _greedy_ideal_generators(ring, elements):
    gens = []
    spanned = {ring.zero}
    for x in elements:
        if x not in spanned:
            gens.append(x)
            spanned = set(span_left(ring, gens).elements)
    return gens


def ideal_module_homs(ring, elements, injective_only=True):
    """All module homomorphisms I -> R for an ideal element list.

    Returns (maps, positions): each map lists the image of elements[i].
    """
    elements = list(elements)
    gens = _greedy_ideal_generators(ring, elements)
    slots = [elements.index(g) for g in gens]
    total = ring.order ** len(gens)
    if total > HOM_CAP:
        raise CapExceeded(f"hom search space {total} exceeds cap {HOM_CAP}")
    cands = [list(range(ring.order)) for _ in gens]
    maps = kernels.linear_maps(ring.add_table, ring.mul_table, ring.order, 1,
                               elements, slots, cands, ring.zero,
                               False, injective_only)
    return maps, slots


def is_pseudo_injective_left(ring, lattice_cap=20000, hom_cap=HOM_CAP):
    """Left pseudo-injectivity with the least failing witness.

    The witness is least in (ideal element list, hom graph) order; a cap
    hit yields an Unknown verdict rather than a guess.
    """
    try:
        ideals = all_left_ideals(ring, lattice_cap)
    except CapExceeded as exc:
        return PseudoInjectivityReport("left", False, False, detail=str(exc))
    for ideal in ideals:
        elements = list(ideal.elements)
        try:
            maps, slots = ideal_module_homs(ring, elements)
        except CapExceeded as exc:
            return PseudoInjectivityReport("left", False, False, detail=str(exc))
        failures = []
        for fmap in maps:
            if not _is_right_multiplication(ring, elements, slots, fmap):
                failures.append(fmap)
        if failures:
            worst = min(failures)
            graph = tuple(zip(elements, worst))
            return PseudoInjectivityReport("left", False, True,
                                           witness=(tuple(elements), graph))
    return PseudoInjectivityReport("left", True, True)


def _is_right_multiplication(ring, elements, slots, fmap):
    # f(x) = x*a holds on all of I iff it holds on a generating set
    for a in range(ring.order):
        if all(fmap[s] == ring.mul(elements[s], a) for s in slots):
            return True
    return False


def is_pseudo_injective_right(ring, lattice_cap=20000, hom_cap=HOM_CAP):
    report = is_pseudo_injective_left(ring.opposite(), lattice_cap, hom_cap)
    return PseudoInjectivityReport("right", report.verdict, report.known,
                                   report.witness, report.detail)
