"""Laurent polynomial arithmetic, determinants, and lambda-module bases."""

import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from quasik.corpus import corpus_group
from quasik.laurent import (LambdaModule, LaurentPoly, exact_div,
                            lambda_basis, laurent_det)


def q(i, n=1, k=1):
    exps = [0] * n
    exps[i] = k
    return LaurentPoly.monomial(tuple(exps))


def test_basic_identities():
    q1 = q(0)
    q1inv = q(0, k=-1)
    assert (q1 + q1inv) * q1 == q1 * q1 + LaurentPoly.one(1)
    a = LaurentPoly.monomial((1, 0)) + LaurentPoly.monomial((0, 1))
    sq = a * a
    assert sq == (LaurentPoly.monomial((2, 0))
                  + LaurentPoly.monomial((1, 1), 2)
                  + LaurentPoly.monomial((0, 2)))


def test_no_zero_terms_stored():
    a = LaurentPoly(2, {(1, 0): 1})
    b = LaurentPoly(2, {(1, 0): -1, (0, 1): 2})
    s = a + b
    assert (1, 0) not in s.terms
    assert s == LaurentPoly.monomial((0, 1), 2)


def test_unit_detection():
    assert q(0).is_unit()
    assert (-q(0, k=-3)).is_unit()
    assert not (q(0) * 2).is_unit()
    assert not (q(0) + LaurentPoly.one(1)).is_unit()
    assert not LaurentPoly.zero(1).is_unit()


def test_arity_mismatch_rejected():
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


polys = st.builds(
    lambda items: LaurentPoly(2, {e: c for e, c in items}),
    st.lists(st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                       st.integers(-4, 4)), max_size=4))


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * LaurentPoly.one(2) == a
    assert (a - a).is_zero()


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_exact_div_roundtrip(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            exact_div(a, b)
    else:
        assert exact_div(a * b, b) == a


def test_exact_div_rejects_nondivisible():
    a = LaurentPoly.monomial((1,)) + LaurentPoly.one(1)
    b = LaurentPoly.monomial((1,)) + LaurentPoly.one(1) * 2
    with pytest.raises(ArithmeticError):
        exact_div(a, b)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    nv = rows[0][0].nvars
    acc = LaurentPoly.zero(nv)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(polys, min_size=n, max_size=n),
                       min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_laurent_det_matches_cofactor_expansion(rows):
    assert laurent_det(rows) == _det_cofactor(rows)


def test_det_of_monomial_permutation_matrix():
    z = LaurentPoly.zero(1)
    rows = [[z, q(0, k=2), z],
            [z, z, -q(0, k=-1)],
            [q(0), z, z]]
    d = laurent_det(rows)
    assert d.is_unit()
    # the 3-cycle has sign +1; the entries multiply to -q^2
    assert d == LaurentPoly.monomial((2,), -1)


def test_det_singular():
    one = LaurentPoly.one(1)
    assert laurent_det([[one, one], [one, one]]).is_zero()


def test_lambda_basis_z2():
    Z2 = corpus_group("Z2")
    basis = lambda_basis(Z2, (1,))
    assert len(basis) == 2
    degs = sorted(b.q_degree for b in basis)
    assert degs == [(Fraction(0),), (Fraction(1, 2),)]
    # identity tuple forces all degrees zero
    for b in lambda_basis(Z2, (0,)):
        assert b.q_degree == (Fraction(0),)


def test_lambda_basis_z3():
    Z3 = corpus_group("Z3")
    degs = sorted(b.q_degree[0] for b in lambda_basis(Z3, (1,)))
    assert degs == [Fraction(0), Fraction(1, 3), Fraction(2, 3)]


def test_lambda_basis_requires_central_entries():
    S3 = corpus_group("S3")
    t = S3.index([0, 2, 1])
    with pytest.raises(ValueError):
        lambda_basis(S3, (t,))


def test_lambda_basis_rank_s3_identity():
    S3 = corpus_group("S3")
    assert len(lambda_basis(S3, (0,))) == 3


def test_module_mul_z2_sign_squared():
    Z2 = corpus_group("Z2")
    mod = LambdaModule(Z2, (1,))
    sign = [i for i, b in enumerate(mod.basis)
            if b.q_degree == (Fraction(1, 2),)][0]
    triv = mod.table.trivial_index
    x = {sign: LaurentPoly.one(1)}
    prod = mod.mul(x, x)
    assert prod == {triv: LaurentPoly.monomial((1,))}


def test_module_mul_z3_conjugate_pair():
    Z3 = corpus_group("Z3")
    mod = LambdaModule(Z3, (1,))
    by_deg = {b.q_degree[0]: i for i, b in enumerate(mod.basis)}
    a = {by_deg[Fraction(1, 3)]: LaurentPoly.one(1)}
    b = {by_deg[Fraction(2, 3)]: LaurentPoly.one(1)}
    prod = mod.mul(a, b)
    assert prod == {mod.table.trivial_index: LaurentPoly.monomial((1,))}


def test_module_unit_law():
    D4 = corpus_group("D4")
    z = [int(c) for c in D4.center() if c != 0][0]
    mod = LambdaModule(D4, (z,))
    one = mod.unit()
    for i in range(mod.rank):
        x = {i: LaurentPoly.monomial((2,), 3)}
        assert mod.eq(mod.mul(one, x), x)


def test_pi_star_is_ring_hom():
    S3 = corpus_group("S3")
    mod = LambdaModule(S3, (0,))
    p = LaurentPoly.monomial((1,)) + LaurentPoly.one(1) * 2
    r = LaurentPoly.monomial((-1,), 5)
    assert mod.eq(mod.mul(mod.pi_star(p), mod.pi_star(r)),
                  mod.pi_star(p * r))
