"""Character tables against textbook data.

Classes are ordered by (size, least representative) and characters by
(degree, value key), so the frozen tables below are deterministic. All
comparisons are exact cyclotomic equalities, never floats.
"""

import numpy as np
import pytest

from quasik import chartable
from quasik.chartable import _dixon_prime, character_table
from quasik.corpus import corpus_group
from quasik.cyclotomic import Cyclotomic


def _int_values(table):
    """Character values as plain ints where possible, else None markers."""
    out = []
    for ch in table.chars:
        row = []
        for v in ch.values:
            row.append(v.as_int() if v.is_int() else None)
        out.append(tuple(row))
    return out


def test_s3_table():
    t = character_table(corpus_group("S3"))
    # classes: e, 3-cycles (size 2), transpositions (size 3)
    assert [int(s) for s in t.sizes] == [1, 2, 3]
    assert set(_int_values(t)) == {(1, 1, 1), (1, 1, -1), (2, -1, 0)}


def test_z4_table():
    t = character_table(corpus_group("Z4"))
    assert t.degrees == (1, 1, 1, 1)
    # each character sends the generator class to a distinct 4th root
    expected = []
    for k in range(4):
        expected.append(tuple(Cyclotomic.root(4, (k * j) % 4)
                              for j in range(4)))
    for row in expected:
        assert any(all(a == b for a, b in zip(row, ch.values))
                   for ch in t.chars)


def test_d4_and_q8_share_value_multiset():
    td = character_table(corpus_group("D4"))
    tq = character_table(corpus_group("Q8"))
    assert td.degrees == tq.degrees == (1, 1, 1, 1, 2)
    assert sorted(_int_values(td)) == sorted(_int_values(tq))
    assert (2, -2, 0, 0, 0) in _int_values(tq)


def test_a4_table():
    t = character_table(corpus_group("A4"))
    assert t.degrees == (1, 1, 1, 3)
    # the two nontrivial linear characters take values in cube roots
    w = Cyclotomic.root(3, 1)
    linear = [ch for ch in t.chars if ch.degree == 1]
    nontriv = [ch for ch in linear
               if any(not v.is_int() for v in ch.values)]
    assert len(nontriv) == 2
    for ch in nontriv:
        vals = set()
        for v in ch.values:
            if not v.is_int():
                vals.add(True)
                assert v == w or v == w * w
    three = [ch for ch in t.chars if ch.degree == 3][0]
    assert [v.as_int() for v in three.values] == [3, -1, 0, 0]


def test_s4_table():
    t = character_table(corpus_group("S4"))
    # classes: e, (01)(23)-type, transpositions, 4-cycles, 3-cycles
    assert [int(s) for s in t.sizes] == [1, 3, 6, 6, 8]
    assert set(_int_values(t)) == {
        (1, 1, 1, 1, 1),
        (1, 1, -1, -1, 1),
        (2, 2, 0, 0, -1),
        (3, -1, 1, -1, 0),
        (3, -1, -1, 1, 0),
    }


def test_degree_square_sums():
    for name in ("trivial", "Z2", "Z6", "Z2xZ2", "D6", "S4"):
        G = corpus_group(name)
        t = character_table(G)
        assert sum(d * d for d in t.degrees) == G.size


def test_d6_degrees():
    assert character_table(corpus_group("D6")).degrees == (1, 1, 1, 1, 2, 2)


def test_orthogonality_rows_and_columns():
    G = corpus_group("S4")
    t = character_table(G)
    r = t.nclasses
    for i in range(r):
        for j in range(r):
            ip = t.inner(t.chars[i].values, t.chars[j].values)
            assert ip == Cyclotomic.from_int(1 if i == j else 0)
    # column orthogonality: sum_chi chi(ci) conj(chi(cj)) = delta |C(ci)|
    for ci in range(r):
        for cj in range(r):
            acc = Cyclotomic.from_int(0)
            for ch in t.chars:
                acc = acc + ch.values[ci] * ch.values[cj].conjugate()
            want = G.size // int(t.sizes[ci]) if ci == cj else 0
            assert acc == Cyclotomic.from_int(want)


def test_regular_character_decomposition():
    G = corpus_group("S3")
    t = character_table(G)
    reg = [Cyclotomic.from_int(G.size if ci == 0 else 0)
           for ci in range(t.nclasses)]
    decomp = dict(t.decompose_values(reg))
    assert decomp == {i: t.chars[i].degree for i in range(t.nclasses)}


def test_permutation_character_s4():
    G = corpus_group("S4")
    t = character_table(G)
    # fixed points of the natural degree-4 action on each class rep
    vals = []
    for cls in G.conjugacy_classes:
        rep = G.elements[int(cls[0])]
        vals.append(Cyclotomic.from_int(int((rep == np.arange(4)).sum())))
    decomp = dict(t.decompose_values(vals))
    trivial = t.trivial_index
    assert decomp[trivial] == 1
    (other, mult), = [(i, m) for i, m in decomp.items() if i != trivial]
    assert mult == 1
    assert t.chars[other].degree == 3


def test_decompose_rejects_non_characters():
    t = character_table(corpus_group("S3"))
    bogus = [Cyclotomic.from_int(1), Cyclotomic.from_int(5),
             Cyclotomic.from_int(0)]
    with pytest.raises(ArithmeticError):
        t.decompose_values(bogus)


def test_central_scalars():
    Q8 = corpus_group("Q8")
    t = character_table(Q8)
    center = Q8.center()
    z = [int(c) for c in center if c != 0][0]
    # the 2-dimensional character sees the central involution as -1
    two = [i for i, ch in enumerate(t.chars) if ch.degree == 2][0]
    assert t.central_scalar(two, z) == 1
    assert t.central_scalar(t.trivial_index, z) == 0
    # non-central elements are rejected
    noncentral = [x for x in range(Q8.size) if x not in set(int(c) for c in center)][0]
    with pytest.raises(ValueError):
        t.central_scalar(two, noncentral)


def test_central_scalars_z4():
    Z4 = corpus_group("Z4")
    t = character_table(Z4)
    ks = sorted(t.central_scalar(i, 1) for i in range(4))
    # generator acts by each primitive scalar exactly once
    assert ks == [0, 1, 2, 3]


def test_dixon_prime_conditions():
    for name in ("S3", "Q8", "S4", "D6"):
        G = corpus_group(name)
        p = _dixon_prime(int(G.exponent), int(G.size))
        assert (p - 1) % G.exponent == 0
        assert p * p > 4 * G.size
        assert G.size % p != 0


def test_disk_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("QUASIK_CACHE", str(tmp_path))
    G = corpus_group("D6")
    chartable._MEM_CACHE.clear()
    t1 = character_table(G)
    files = list(tmp_path.iterdir())
    assert files, "table was not written to the cache directory"
    chartable._MEM_CACHE.clear()
    t2 = character_table(G)
    assert t1 is not t2
    assert t1.degrees == t2.degrees
    for a, b in zip(t1.chars, t2.chars):
        assert all(x == y for x, y in zip(a.values, b.values))


def test_corrupt_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("QUASIK_CACHE", str(tmp_path))
    G = corpus_group("Z6")
    chartable._MEM_CACHE.clear()
    t1 = character_table(G)
    for f in tmp_path.iterdir():
        f.write_text("{not json")
    chartable._MEM_CACHE.clear()
    t2 = character_table(G)
    assert t1.degrees == t2.degrees
