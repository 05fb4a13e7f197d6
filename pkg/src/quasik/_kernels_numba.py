"""Numba-jitted implementations of the hot integer-table kernels.

Import fails when numba is missing; _backend falls back to the numpy
module in that case. Loops mirror the numpy versions exactly, so both
backends must agree bit for bit (tests/test_backends.py enforces this).
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _cmp_rows(a, b):
    for t in range(a.shape[0]):
        if a[t] < b[t]:
            return -1
        if a[t] > b[t]:
            return 1
    return 0


@njit(cache=True)
def _find_row(elements, row):
    lo = 0
    hi = elements.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        c = _cmp_rows(elements[mid], row)
        if c < 0:
            lo = mid + 1
        elif c > 0:
            hi = mid
        else:
            return mid
    return -1


@njit(cache=True)
def _find_rows(elements, queries):
    m = queries.shape[0]
    out = np.empty(m, dtype=np.int32)
    for i in range(m):
        out[i] = _find_row(elements, queries[i])
    return out


def find_rows(elements, queries):
    elements = np.ascontiguousarray(elements, dtype=np.int32)
    queries = np.ascontiguousarray(queries, dtype=np.int32)
    return _find_rows(elements, queries)


@njit(cache=True)
def _mult_table(elements):
    n, d = elements.shape
    out = np.empty((n, n), dtype=np.int32)
    row = np.empty(d, dtype=np.int32)
    for i in range(n):
        for j in range(n):
            for x in range(d):
                row[x] = elements[j, elements[i, x]]
            k = _find_row(elements, row)
            if k < 0:
                raise ValueError("element set is not closed under composition")
            out[i, j] = k
    return out


def mult_table(elements):
    return _mult_table(np.ascontiguousarray(elements, dtype=np.int32))


@njit(cache=True)
def _minimal_tuple_mask(conj, cand):
    M, n = cand.shape
    N = conj.shape[0]
    out = np.ones(M, dtype=np.bool_)
    for m in range(M):
        for g in range(N):
            for k in range(n):
                a = conj[g, cand[m, k]]
                b = cand[m, k]
                if a < b:
                    out[m] = False
                    break
                if a > b:
                    break
            if not out[m]:
                break
    return out


def minimal_tuple_mask(conj, cand):
    conj = np.ascontiguousarray(conj, dtype=np.int32)
    cand = np.ascontiguousarray(cand, dtype=np.int32)
    if cand.shape[0] == 0:
        return np.ones(0, dtype=bool)
    return _minimal_tuple_mask(conj, cand)


@njit(cache=True)
def _class_coeffs(mult, inv, class_of, reps):
    r = len(reps)
    n = mult.shape[0]
    a = np.zeros((r, r, r), dtype=np.int64)
    for k in range(r):
        z = reps[k]
        for x in range(n):
            y = mult[inv[x], z]
            a[class_of[x], class_of[y], k] += 1
    return a


def class_coeffs(mult, inv, class_of, reps):
    return _class_coeffs(
        np.ascontiguousarray(mult, dtype=np.int32),
        np.ascontiguousarray(inv, dtype=np.int32),
        np.ascontiguousarray(class_of, dtype=np.int32),
        np.ascontiguousarray(reps, dtype=np.int32),
    )


@njit(cache=True)
def _point_orbits(action):
    K, P = action.shape
    label = np.arange(P, dtype=np.int32)
    stack = np.empty(P, dtype=np.int32)
    for start in range(P):
        if label[start] != start:
            continue
        top = 0
        stack[top] = start
        top += 1
        while top > 0:
            top -= 1
            p = stack[top]
            for g in range(K):
                q = action[g, p]
                if label[q] > start:
                    label[q] = start
                    stack[top] = q
                    top += 1
    return label


def point_orbits(action):
    action = np.ascontiguousarray(action, dtype=np.int32)
    if action.shape[0] == 0 or action.shape[1] == 0:
        return np.arange(action.shape[1], dtype=np.int32)
    return _point_orbits(action)
