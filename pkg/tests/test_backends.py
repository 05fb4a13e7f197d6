"""The numba and numpy kernels must agree exactly on real group data."""

import itertools
import subprocess
import sys

import numpy as np
import pytest

from quasik import _kernels_numpy as knp
from quasik.corpus import corpus_group
from quasik.groups import GSet

try:
    from quasik import _kernels_numba as knb
except ImportError:  # pragma: no cover
    knb = None

needs_numba = pytest.mark.skipif(knb is None, reason="numba not importable")

GROUPS = [corpus_group(n) for n in ("S4", "D6", "Q8")]


@needs_numba
def test_find_rows_agree():
    for G in GROUPS:
        q = np.vstack([G.elements[::2], G.elements[1]])
        a = knp.find_rows(G.elements, q)
        b = knb.find_rows(G.elements, q)
        assert np.array_equal(a, b)
        # absent rows report -1 on both
        bad = np.full((1, G.degree), 0, dtype=np.int32)
        bad[0, 0] = 1
        bad[0, 1] = 1
        assert knp.find_rows(G.elements, bad)[0] == -1
        assert knb.find_rows(G.elements, bad)[0] == -1


@needs_numba
def test_mult_table_agree():
    for G in GROUPS:
        a = knp.mult_table(G.elements)
        b = knb.mult_table(G.elements)
        assert np.array_equal(a, b)


@needs_numba
def test_minimal_tuple_mask_agree():
    for G in GROUPS:
        pairs = [(x, y) for x, y in
                 itertools.product(range(G.size), repeat=2)
                 if G.mult[x, y] == G.mult[y, x]]
        cand = np.asarray(pairs, dtype=np.int32)
        a = knp.minimal_tuple_mask(G.conj, cand)
        b = knb.minimal_tuple_mask(G.conj, cand)
        assert np.array_equal(a, b)


@needs_numba
def test_class_coeffs_agree():
    for G in GROUPS:
        reps = np.asarray([int(c[0]) for c in G.conjugacy_classes],
                          dtype=np.int32)
        a = knp.class_coeffs(G.mult, G.inv, G.class_of, reps)
        b = knb.class_coeffs(G.mult, G.inv, G.class_of, reps)
        assert np.array_equal(a, b)


@needs_numba
def test_point_orbits_agree():
    for G in GROUPS:
        for X in (GSet.regular(G), GSet.cosets(G, G.centralizer([1]))):
            a = knp.point_orbits(X.action)
            b = knb.point_orbits(X.action)
            assert np.array_equal(a, b)


@needs_numba
def test_full_stack_matches_across_backends():
    """One end-to-end export must be byte identical under either backend."""
    prog = (
        "import json\n"
        "from quasik.corpus import corpus_group\n"
        "from quasik.groups import GSet\n"
        "from quasik.qtheory import qk_compute\n"
        "G = corpus_group('S3')\n"
        "ring = qk_compute(G, GSet.cosets(G, G.subgroup("
        "G.locate([[0,1,2],[1,0,2]]))), 2)\n"
        "print(json.dumps(ring.to_json(), sort_keys=True))\n"
    )
    import os
    src = os.path.join(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__))), "src")
    outs = []
    for backend in ("numpy", "numba"):
        env = dict(os.environ, QUASIK_BACKEND=backend)
        env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
        r = subprocess.run([sys.executable, "-c", prog],
                           capture_output=True, text=True, env=env)
        assert r.returncode == 0, r.stderr
        outs.append(r.stdout)
    assert outs[0] == outs[1]
