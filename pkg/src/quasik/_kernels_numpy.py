"""Pure numpy implementations of the hot integer-table kernels.

Same signatures as _kernels_numba; selection happens in _backend. All
kernels are exact integer computations on permutation / index tables, no
floating point anywhere.
"""

import numpy as np


def _row_keys(rows):
    """View int32 rows as opaque fixed-width keys whose memcmp order is lex order.

    Requires nonnegative entries, which holds for permutation images and
    element indices. Big-endian so byte order agrees with numeric order.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    be = np.ascontiguousarray(rows.astype(">i4"))
    return be.view(np.dtype((np.void, rows.shape[1] * 4))).ravel()


def find_rows(elements, queries):
    """Indices of each query row in the lex-sorted row array `elements`.

    Returns -1 for rows that are absent.
    """
    keys = _row_keys(elements)
    q = _row_keys(queries)
    idx = np.searchsorted(keys, q)
    idx[idx >= len(keys)] = 0
    ok = keys[idx] == q
    out = idx.astype(np.int32)
    out[~ok] = -1
    return out


def mult_table(elements):
    """Composition table on a closed, lex-sorted set of permutation rows.

    Convention: (p*q)(x) = q(p(x)), i.e. apply p first. Raises if the set
    is not closed.
    """
    n, d = elements.shape
    keys = _row_keys(elements)
    out = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        comp = elements[:, elements[i]]
        q = _row_keys(comp)
        idx = np.searchsorted(keys, q)
        if (idx >= n).any() or (keys[idx] != q).any():
            raise ValueError("element set is not closed under composition")
        out[i] = idx
    return out


def minimal_tuple_mask(conj, cand):
    """Mark candidate tuples that are lex-minimal in their conjugation orbit.

    conj[g, x] is the index of g x g^-1; cand is an [M, n] array of element
    index tuples. A tuple survives when no simultaneous conjugate is lex
    smaller.
    """
    M, n = cand.shape
    N = conj.shape[0]
    mask = np.ones(M, dtype=bool)
    if M == 0:
        return mask
    step = max(1, 4_000_000 // max(1, N * n))
    for s in range(0, M, step):
        c = cand[s:s + step]
        conjed = conj[:, c]
        less = np.zeros((N, c.shape[0]), dtype=bool)
        decided = np.zeros_like(less)
        for k in range(n):
            col = conjed[:, :, k]
            base = c[None, :, k]
            less |= ~decided & (col < base)
            decided |= col != base
        mask[s:s + step] = ~less.any(axis=0)
    return mask


def class_coeffs(mult, inv, class_of, reps):
    """Class algebra structure constants a[i,j,k].

    a[i,j,k] counts pairs (x, y) with x in class i, y in class j and
    x*y equal to the fixed representative of class k.
    """
    r = len(reps)
    a = np.zeros((r, r, r), dtype=np.int64)
    i_x = class_of.astype(np.intp)
    for k in range(r):
        y = mult[inv, reps[k]]
        np.add.at(a[:, :, k], (i_x, class_of[y]), 1)
    return a


def point_orbits(action):
    """Orbit labels for a permutation action table.

    action[g, p] is the image of point p under the g-th element of a group
    closed under inversion. Returns, for each point, the least point of its
    orbit.
    """
    P = action.shape[1]
    label = np.arange(P, dtype=np.int32)
    if action.shape[0] == 0 or P == 0:
        return label
    while True:
        pulled = label[action].min(axis=0)
        new = np.minimum(label, pulled)
        if (new == label).all():
            return label
        label = new
