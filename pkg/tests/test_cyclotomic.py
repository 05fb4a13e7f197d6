"""Exact cyclotomic integer arithmetic.

Polynomial coefficients are pinned against a frozen table (checked once
against the standard factorization of x^m - 1) plus the product identity
prod_{d | m} Phi_d = x^m - 1, which is independent of the table.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasik.cyclotomic import Cyclotomic, cyclotomic_poly, euler_phi, lcm

# Phi_m as coefficient lists, constant term first
FROZEN_PHI = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    5: [1, 1, 1, 1, 1],
    6: [1, -1, 1],
    8: [1, 0, 0, 0, 1],
    9: [1, 0, 0, 1, 0, 0, 1],
    12: [1, 0, -1, 0, 1],
    15: [1, -1, 0, 1, -1, 1, 0, -1, 1],
    24: [1, 0, 0, 0, -1, 0, 0, 0, 1],
}


def test_cyclotomic_poly_frozen():
    for m, coeffs in FROZEN_PHI.items():
        assert list(cyclotomic_poly(m)) == coeffs


def test_cyclotomic_poly_degree_is_totient():
    for m in range(1, 40):
        assert len(cyclotomic_poly(m)) - 1 == euler_phi(m)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_product_over_divisors():
    for m in (1, 2, 6, 12, 18, 20, 30):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                prod = _poly_mul(prod, list(cyclotomic_poly(d)))
        want = [0] * (m + 1)
        want[0] = -1
        want[m] = 1
        assert prod == want


def test_root_relations():
    z3 = Cyclotomic.root(3, 1)
    assert z3 + z3 * z3 == Cyclotomic.from_int(-1)
    z4 = Cyclotomic.root(4, 1)
    assert z4 * z4 == Cyclotomic.from_int(-1)
    z5 = Cyclotomic.root(5, 1)
    total = Cyclotomic.from_int(1)
    for k in range(1, 5):
        total = total + Cyclotomic.root(5, k)
    assert total.is_zero()


def test_cross_conductor_equality():
    assert Cyclotomic.root(2, 1) == Cyclotomic.from_int(-1)
    assert Cyclotomic.root(6, 3) == Cyclotomic.from_int(-1)
    assert Cyclotomic.root(6, 2) == Cyclotomic.root(3, 1)
    assert Cyclotomic.root(12, 3) == Cyclotomic.root(4, 1)
    # zeta_2 * zeta_3 = zeta_6^5
    assert Cyclotomic.root(2, 1) * Cyclotomic.root(3, 1) == \
        Cyclotomic.root(6, 5)


def test_conjugation():
    for m in (3, 4, 5, 8, 12):
        for k in range(m):
            z = Cyclotomic.root(m, k)
            assert z.conjugate() == Cyclotomic.root(m, (m - k) % m)
            assert (z * z.conjugate()) == Cyclotomic.from_int(1)


def test_promote_requires_multiple():
    z = Cyclotomic.root(4, 1)
    with pytest.raises(ValueError):
        z.promote(6)
    assert z.promote(12) == z


def test_divexact_and_is_int():
    six = Cyclotomic.from_int(6)
    assert six.divexact(3) == Cyclotomic.from_int(2)
    with pytest.raises(ArithmeticError):
        six.divexact(4)
    assert six.is_int()
    assert six.as_int() == 6
    assert not Cyclotomic.root(3, 1).is_int()


def test_unhashable_by_design():
    with pytest.raises(TypeError):
        hash(Cyclotomic.root(3, 1))


def test_lcm():
    assert lcm(4, 6) == 12
    assert lcm(1, 7) == 7


small_roots = st.tuples(st.sampled_from([1, 2, 3, 4, 6, 8, 12]),
                        st.integers(0, 11), st.integers(-3, 3))


def _val(spec):
    m, k, c = spec
    return Cyclotomic.root(m, k % m) * c


@settings(max_examples=80, deadline=None)
@given(small_roots, small_roots, small_roots)
def test_ring_axioms(a, b, c):
    x, y, z = _val(a), _val(b), _val(c)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x - x).is_zero()


@settings(max_examples=60, deadline=None)
@given(small_roots, small_roots)
def test_conjugation_is_ring_hom(a, b):
    x, y = _val(a), _val(b)
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
