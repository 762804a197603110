"""Q/Z arithmetic, cyclotomic polynomials, exact root-of-unity sums."""

import pytest
import sympy

from frobring.exact import QZ, RootSum, cyclotomic, poly_divide_exact, poly_mod


def test_qz_canonical_form():
    assert QZ(5, 4) == QZ(1, 4)
    assert QZ(-1, 4) == QZ(3, 4)
    assert QZ(2, 4) == QZ(1, 2)
    assert QZ(4, 4) == QZ(0, 1)
    assert QZ(0, 7).den == 1


def test_qz_arithmetic():
    assert QZ(1, 4) + QZ(3, 4) == QZ(0, 1)
    assert QZ(1, 2) + QZ(1, 3) == QZ(5, 6)
    assert -QZ(1, 3) == QZ(2, 3)
    assert QZ(1, 6) - QZ(1, 2) == QZ(2, 3)
    assert 3 * QZ(1, 6) == QZ(1, 2)
    assert QZ(1, 6).order() == 6 and QZ(0, 1).order() == 1
    assert QZ(3, 4).scaled(8) == 6
    with pytest.raises(ValueError):
        QZ(1, 3).scaled(4)


def test_qz_immutable_and_hashable():
    v = QZ(1, 3)
    with pytest.raises(AttributeError):
        v.num = 2
    assert len({QZ(1, 3), QZ(2, 6), QZ(5, 3)}) == 2


@pytest.mark.parametrize("n", list(range(1, 31)) + [36, 48, 64])
def test_cyclotomic_matches_sympy(n):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic(n)) == [int(c) for c in expected]


def test_cyclotomic_product_identity():
    # prod over d | n of phi_d = x^n - 1
    for n in (6, 12, 20):
        prod = (1,)
        for d in range(1, n + 1):
            if n % d == 0:
                from frobring.exact import poly_mul
                prod = poly_mul(prod, cyclotomic(d))
        assert list(prod) == [-1] + [0] * (n - 1) + [1]


def test_poly_division():
    # (x^2 - 1) / (x - 1) = x + 1
    assert poly_divide_exact((-1, 0, 1), (-1, 1)) == (1, 1)
    assert poly_mod((0, 0, 1), (1, 0, 1)) == (-1,)  # x^2 mod x^2+1 = -1
    with pytest.raises(AssertionError):
        poly_divide_exact((1, 1, 1), (-1, 1))


def test_rootsum_full_root_set_vanishes():
    for n in range(1, 65):
        rs = RootSum(n, [1] * n)
        if n == 1:
            assert rs.constant_value() == 1
        else:
            assert rs.is_zero(), n


def test_rootsum_fixtures():
    # 2*(1 + zeta_2) = 2*(1 - 1) = 0
    assert RootSum(2, (2, 2)).is_zero()
    # values {0, 1/2, 0, 1/2} on Z/4 under the order-2 character
    assert RootSum(4, (2, 0, 2, 0)).is_zero()
    assert RootSum(4, (3, 0, 1, 0)).constant_value() == 2  # 3 - 1
    assert RootSum(4, (1, 1, 0, 0)).constant_value() is None  # 1 + i
    assert RootSum(4, (5, 0, 0, 0)).constant_value() == 5
    # zeta_4^2 = -1: counts (1, 0, 1, 0) reduce to 0
    assert RootSum(4, (1, 0, 1, 0)).is_zero()
    assert not RootSum(3, (1, 1, 0)).is_zero()


def test_rootsum_zero_test_matches_sympy():
    import random
    rng = random.Random(7)
    zexp = sympy.exp
    for n in (3, 4, 6, 8, 12):
        zeta = sympy.exp(2 * sympy.pi * sympy.I / n)
        for _ in range(10):
            counts = [rng.randrange(-2, 3) for _ in range(n)]
            value = sympy.simplify(sum(c * zeta ** j for j, c in enumerate(counts)))
            assert RootSum(n, counts).is_zero() == (value == 0)


def test_rootsum_addition_and_scaling():
    a = RootSum(4, (1, 2, 3, 4))
    b = RootSum(4, (0, 1, 0, 1))
    assert (a + b).counts == (1, 3, 3, 5)
    assert a.scale(-1).counts == (-1, -2, -3, -4)
    with pytest.raises(ValueError):
        a + RootSum(3, (1, 1, 1))
