"""Ring structure of QK_n(X): ranks, degrees, products, Tate export."""

import pytest
from fractions import Fraction

from quasik.corpus import corpus_group, standard_gsets
from quasik.groups import GSet
from quasik.laurent import LaurentPoly
from quasik.qtheory import (QClass, qk_compute, rank_identity_holds,
                            tate_export, verify_free_action)

S3 = corpus_group("S3")
Z2 = corpus_group("Z2")
Z3 = corpus_group("Z3")


def _degrees(ring, ci):
    # n = 1 throughout: unpack the single q-degree
    return [b.q_degree[0] for b in ring.components[ci].module.basis]


def test_s3_point_n1_ranks_and_degrees():
    ring = qk_compute(S3, GSet.point(S3), 1)
    assert ring.total_rank == 8
    assert sorted(c.rank for c in ring.components) == [2, 3, 3]
    by_order = {}
    for ci, comp in enumerate(ring.components):
        o = S3.element_orders[comp.sigma.entries[0]]
        by_order[o] = sorted(set(_degrees(ring, ci)))
    assert by_order[1] == [Fraction(0)]
    assert by_order[2] == [Fraction(0), Fraction(1, 2)]
    assert by_order[3] == [Fraction(0), Fraction(1, 3), Fraction(2, 3)]


def _basis_index(ring, ci, degree):
    hits = [bi for bi, d in enumerate(_degrees(ring, ci)) if d == degree]
    assert len(hits) == 1
    return hits[0]


def test_z2_point_sign_squares_to_q_times_unit():
    ring = qk_compute(Z2, GSet.point(Z2), 1)
    ci = next(i for i, c in enumerate(ring.components)
              if c.sigma.entries != (0,))
    sgn = _basis_index(ring, ci, Fraction(1, 2))
    triv = _basis_index(ring, ci, Fraction(0))
    x = ring.basis_class(ci, sgn)
    want = QClass(ring, {ci: {triv: LaurentPoly.monomial((1,))}})
    assert x * x == want


def test_z3_conjugate_pair_product():
    ring = qk_compute(Z3, GSet.point(Z3), 1)
    ci = next(i for i, c in enumerate(ring.components)
              if c.sigma.entries == (1,))
    a = _basis_index(ring, ci, Fraction(1, 3))
    b = _basis_index(ring, ci, Fraction(2, 3))
    triv = _basis_index(ring, ci, Fraction(0))
    prod = ring.basis_class(ci, a) * ring.basis_class(ci, b)
    assert prod == QClass(ring, {ci: {triv: LaurentPoly.monomial((1,))}})


def test_cross_component_product_vanishes():
    ring = qk_compute(S3, GSet.point(S3), 1)
    x = ring.basis_class(0, 0)
    y = ring.basis_class(1, 0)
    assert (x * y).is_zero()
    assert (y * x).is_zero()


def test_unit_and_q_unit():
    for name in ("S3", "D4"):
        G = corpus_group(name)
        for X in standard_gsets(G).values():
            ring = qk_compute(G, X, 1)
            one = ring.unit()
            for ci, comp in enumerate(ring.components):
                for bi in range(comp.rank):
                    x = ring.basis_class(ci, bi)
                    assert one * x == x
                    assert x * one == x
            q = ring.q(0)
            qinv = ring.pi_star(LaurentPoly.monomial((-1,)))
            assert q * qinv == one


def test_scalar_and_sub():
    ring = qk_compute(Z2, GSet.point(Z2), 1)
    x = ring.basis_class(0, 0)
    assert x - x == ring.zero()
    assert 2 * x == x + x
    assert (x * 0).is_zero()


def test_q_index_bounds():
    ring = qk_compute(Z2, GSet.point(Z2), 1)
    with pytest.raises(IndexError):
        ring.q(1)
    with pytest.raises(IndexError):
        ring.basis_class(0, 99)


def test_ring_cache_returns_same_object():
    X = GSet.point(S3)
    a = qk_compute(S3, X, 1)
    b = qk_compute(S3, X, 1)
    assert a is b


def test_class_constructor_drops_zero_coords():
    ring = qk_compute(Z2, GSet.point(Z2), 1)
    a = QClass(ring, {0: {0: LaurentPoly.zero(1)}})
    assert a == ring.zero()
    assert a.is_zero()


def test_rank_identity_small_groups():
    for name in ("Z2", "S3", "Z6"):
        assert rank_identity_holds(corpus_group(name), 1)


def test_free_action_bool():
    assert verify_free_action(Z2, GSet.regular(Z2), 1) is True
    assert verify_free_action(S3, GSet.regular(S3), 2) is True
    with pytest.raises(ValueError):
        verify_free_action(S3, GSet.point(S3), 1)


def test_tate_export_z2_point():
    ring = qk_compute(Z2, GSet.point(Z2), 1)
    data = tate_export(ring)
    assert data["coefficients"] == "Z((q))"
    assert data["total_rank"] == 4
    comps = data["components"]
    assert len(comps) == 2
    syms = {tuple(c["sigma"][0]): [s["symbol"] for s in c["symbols"]]
            for c in comps}
    assert syms[(0, 1)] == ["[chi0]", "[chi1]"]
    # chi0 is the sign character (rows sort trivial last)
    assert syms[(1, 0)] == ["q^(1/2)*[chi0]", "[chi1]"]


def test_tate_export_rejects_higher_n():
    ring = qk_compute(S3, GSet.point(S3), 2)
    with pytest.raises(ValueError):
        tate_export(ring)
