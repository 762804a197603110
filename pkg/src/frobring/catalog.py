"""The standard test catalog: small rings covering every classification class.

Orders stay at or below 64 so that the whole battery of exact checks
(duality, annihilators, extension searches) runs in seconds.  The
catalog deliberately contains semisimple, Frobenius-but-not-semisimple,
and non-quasi-Frobenius members, plus products, a matrix ring, a group
ring, and the order-8 local ring with three minimal ideals.
"""

from .construct import (FpAlgebra, GaloisField, GroupRing, MatrixRing,
                        Opposite, Product, ZMod, build_ring)

_T2F2 = FpAlgebra(2, 3, ("1", "a", "b"), ((1, 1, 1, 1), (1, 2, 2, 1)))

STANDARD_CATALOG = (
    ("zmod2", ZMod(2)),
    ("zmod4", ZMod(4)),
    ("zmod6", ZMod(6)),
    ("zmod8", ZMod(8)),
    ("zmod9", ZMod(9)),
    ("gf4", GaloisField(2, 2)),
    ("gf8", GaloisField(2, 3)),
    ("gf9", GaloisField(3, 2)),
    # F_2[x]/(x^2): local, Frobenius, not semisimple
    ("f2x", FpAlgebra(2, 2, ("1", "x"), ())),
    # F_2[x,y]/(x,y)^2: local with three minimal ideals, not quasi-Frobenius
    ("local8", FpAlgebra(2, 3, ("1", "x", "y"), ())),
    # upper triangular 2x2 over F_2 (basis 1, a = e11, b = e12)
    ("t2f2", _T2F2),
    ("t2f2op", Opposite(_T2F2)),
    ("f2c3", GroupRing(ZMod(2), "cyclic", 3)),
    ("f2xf3", Product((ZMod(2), ZMod(3)))),
    ("m2f2", MatrixRing(2, ZMod(2))),
    ("m2f2xf3", Product((MatrixRing(2, ZMod(2)), ZMod(3)))),
)


def catalog_rings():
    """Build every catalog ring (cached across calls)."""
    return [(name, build_ring(expr)) for name, expr in STANDARD_CATALOG]


def catalog_expr(name):
    for n, expr in STANDARD_CATALOG:
        if n == name:
            return expr
    raise KeyError(name)
