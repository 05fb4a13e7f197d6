"""Exact complex character tables of finite groups.

The table is computed by the class-sum method: structure constants of the
class algebra are diagonalized over a prime field F_p with p = 1 mod
exponent(G) and p^2 > 4|G|, and eigenvalue multiplicities are lifted to
exact cyclotomic integers through the discrete Fourier inversion of the
power map. No floating point is involved at any step.

Tables are cached in memory by the exact element set of the group and,
when QUASIK_CACHE points at a directory, on disk as JSON.
"""

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from functools import cached_property, lru_cache
from math import isqrt

import numpy as np

from . import _backend as K
from .cyclotomic import Cyclotomic, lcm


# -- modular linear algebra -------------------------------------------------


def _inv_mod(a, p):
    return pow(int(a) % p, p - 2, p)


def _rref_mod(A, p):
    """Reduced row echelon form over F_p; returns (R, pivot_columns)."""
    R = A.copy() % p
    rows, cols = R.shape
    pivots = []
    rank = 0
    for c in range(cols):
        sel = -1
        for r in range(rank, rows):
            if R[r, c] % p:
                sel = r
                break
        if sel < 0:
            continue
        if sel != rank:
            R[[rank, sel]] = R[[sel, rank]]
        R[rank] = (R[rank] * _inv_mod(R[rank, c], p)) % p
        for r in range(rows):
            if r != rank and R[r, c]:
                R[r] = (R[r] - R[r, c] * R[rank]) % p
        pivots.append(c)
        rank += 1
        if rank == rows:
            break
    return R, pivots


def _nullspace_mod(A, p):
    """Columns spanning the kernel of A over F_p."""
    R, pivots = _rref_mod(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-R[r, fc]) % p
    return basis


def _column_echelon(B, p):
    """Column-reduce B; returns (B', pivot_rows) with B'[pivot_rows] = I."""
    R, pivots = _rref_mod(B.T % p, p)
    rank = len(pivots)
    return np.ascontiguousarray(R[:rank].T), pivots


def _primitive_root(p):
    fac = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            fac.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fac.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ArithmeticError("no primitive root found")


@lru_cache(maxsize=None)
def _dixon_prime(exponent, order):
    p = exponent + 1
    while True:
        if p > 2 and p * p > 4 * order and _is_prime(p) and (p - 1) % exponent == 0:
            return p
        p += 1


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- table construction ------------------------------------------------------


class Character:
    """An irreducible complex character, values indexed by class."""

    __slots__ = ("degree", "values")

    def __init__(self, degree, values):
        self.degree = int(degree)
        self.values = tuple(values)

    def __repr__(self):
        return "Character(deg=%d)" % self.degree


def value_key(values, conductor):
    """Exact dict key for a tuple of cyclotomic values at a fixed conductor."""
    return tuple(v.promote(conductor).c for v in values)


class CharacterTable:
    """All irreducible characters of a finite group, exactly."""

    def __init__(self, group, chars, conductor, prime):
        self.group = group
        self.conductor = conductor
        self.prime = prime
        self.classes = group.conjugacy_classes
        self.reps = np.array([int(c[0]) for c in self.classes], dtype=np.int32)
        self.sizes = np.array([len(c) for c in self.classes], dtype=np.int32)
        self.class_of = group.class_of
        self.inv_class = self.class_of[group.inv[self.reps]]
        self.chars = tuple(chars)
        self._value_index = {}
        self._scalar_cache = {}
        self._tensor_cache = {}

    @property
    def nclasses(self):
        return len(self.classes)

    @property
    def degrees(self):
        return tuple(ch.degree for ch in self.chars)

    @cached_property
    def trivial_index(self):
        for i, ch in enumerate(self.chars):
            if ch.degree == 1 and all(v == 1 for v in ch.values):
                return i
        raise AssertionError("table has no trivial character")

    def value_index_at(self, conductor):
        """Lookup dict from promoted value keys to character index."""
        if conductor % self.conductor:
            raise ValueError("lookup conductor must be a multiple of the "
                             "table conductor")
        idx = self._value_index.get(conductor)
        if idx is None:
            idx = {value_key(ch.values, conductor): i
                   for i, ch in enumerate(self.chars)}
            self._value_index[conductor] = idx
        return idx

    # -- inner products and decomposition --------------------------------

    def inner(self, vals_a, vals_b):
        """<a, b> = (1/|G|) sum_i h_i a_i conj(b_i), exact."""
        acc = Cyclotomic.from_int(0)
        for h, a, b in zip(self.sizes, vals_a, vals_b):
            acc = acc + a * b.conjugate() * int(h)
        return acc.divexact(self.group.size)

    def decompose_values(self, vals):
        """Multiplicities of each irreducible in a (true) character given by
        its class values. Exact; raises when vals is not a character."""
        L = self.conductor
        for v in vals:
            L = lcm(L, v.m)
        hit = self.value_index_at(L).get(value_key(vals, L))
        if hit is not None:
            return ((hit, 1),)
        out = []
        for i, ch in enumerate(self.chars):
            m = self.inner(vals, ch.values)
            if m.is_zero():
                continue
            mi = m.as_int()
            if mi < 0:
                raise ArithmeticError("negative multiplicity: not a character")
            out.append((i, mi))
        # exactness: the multiplicities must reconstruct vals
        for ci in range(self.nclasses):
            acc = Cyclotomic.from_int(0)
            for i, mi in out:
                acc = acc + self.chars[i].values[ci] * mi
            if not acc == vals[ci]:
                raise ArithmeticError("value tuple is not a true character")
        return tuple(out)

    def tensor_decompose(self, i, j):
        """Decomposition of chi_i * chi_j into irreducibles."""
        if j < i:
            i, j = j, i
        cached = self._tensor_cache.get((i, j))
        if cached is None:
            vals = tuple(a * b for a, b in
                         zip(self.chars[i].values, self.chars[j].values))
            cached = self.decompose_values(vals)
            self._tensor_cache[(i, j)] = cached
        return cached

    # -- central scalars ---------------------------------------------------

    def central_scalar(self, char_idx, elem):
        """The k with chi(z) = chi(1) zeta_l^k for a central element z of
        order l; normalized to 0 <= k < l."""
        key = (char_idx, int(elem))
        cached = self._scalar_cache.get(key)
        if cached is not None:
            return cached
        ci = int(self.class_of[int(elem)])
        if self.sizes[ci] != 1:
            raise ValueError("element is not central")
        l = int(self.group.element_orders[int(elem)])
        ch = self.chars[char_idx]
        target = ch.values[ci]
        base = ch.values[0]
        for k in range(l):
            if target == base * Cyclotomic.root(l, k):
                self._scalar_cache[key] = k
                return k
        raise ArithmeticError("central element acts without a root-of-unity "
                              "scalar; table is corrupt")

    def central_fraction(self, char_idx, elem):
        l = int(self.group.element_orders[int(elem)])
        return Fraction(self.central_scalar(char_idx, elem), l)


def _class_matrices(G):
    classes = G.conjugacy_classes
    reps = np.array([int(c[0]) for c in classes], dtype=np.int32)
    a = K.class_coeffs(G.mult, G.inv, G.class_of, reps)
    # matrix of class i acting by multiplication: (M_i)[j, k] = a[i, j, k]
    return [np.ascontiguousarray(a[i]) for i in range(len(classes))]


def _common_eigenvectors(mats, p):
    """Common eigenvector columns of the commuting class matrices over F_p."""
    r = mats[0].shape[0]
    spaces = [(_column_echelon(np.eye(r, dtype=np.int64), p))]
    for Mi in mats[1:]:
        if all(B.shape[1] == 1 for B, _ in spaces):
            break
        Mi = Mi % p
        refined = []
        for B, pivots in spaces:
            d = B.shape[1]
            if d == 1:
                refined.append((B, pivots))
                continue
            MB = (Mi @ B) % p
            A = MB[pivots, :]
            found = 0
            for lam in range(p):
                ker = _nullspace_mod((A - lam * np.eye(d, dtype=np.int64)) % p, p)
                if ker.shape[1] == 0:
                    continue
                refined.append(_column_echelon((B @ ker) % p, p))
                found += ker.shape[1]
                if found == d:
                    break
            if found != d:
                raise ArithmeticError("class matrix failed to split over F_p")
        spaces = refined
    for B, _ in spaces:
        if B.shape[1] != 1:
            raise ArithmeticError("class algebra did not split into lines")
    vecs = []
    for B, _ in spaces:
        w = B[:, 0] % p
        if w[0] % p == 0:
            raise ArithmeticError("eigenvector vanishes on the identity class")
        vecs.append((w * _inv_mod(w[0], p)) % p)
    return vecs


def _build_table(G):
    classes = G.conjugacy_classes
    r = len(classes)
    reps = [int(c[0]) for c in classes]
    sizes = [len(c) for c in classes]
    m = int(G.exponent)
    p = _dixon_prime(m, G.size)
    mats = _class_matrices(G)
    vecs = _common_eigenvectors(mats, p)
    if len(vecs) != r:
        raise ArithmeticError("expected %d eigenvectors, found %d"
                              % (r, len(vecs)))
    inv_class = [int(G.class_of[G.inv[rep]]) for rep in reps]
    inv_sizes = [_inv_mod(h, p) for h in sizes]
    theta = pow(_primitive_root(p), (p - 1) // m, p)
    # power map: class of rep_i^s
    orders = [int(G.element_orders[rep]) for rep in reps]
    power_class = []
    for i, rep in enumerate(reps):
        pc = []
        acc = 0
        for s in range(orders[i]):
            pc.append(int(G.class_of[acc]))
            acc = int(G.mult[acc, rep])
        power_class.append(pc)

    chars = []
    for w in vecs:
        s = 0
        for i in range(r):
            s = (s + int(w[i]) * int(w[inv_class[i]]) * inv_sizes[i]) % p
        d2 = (G.size * _inv_mod(s, p)) % p
        deg = -1
        for d in range(1, isqrt(G.size) + 1):
            if (d * d) % p == d2:
                deg = d
                break
        if deg < 0:
            raise ArithmeticError("degree recovery failed")
        chi_bar = [(deg * int(w[i]) * inv_sizes[i]) % p for i in range(r)]
        values = []
        for i in range(r):
            l = orders[i]
            theta_l = pow(theta, m // l, p)
            inv_l = _inv_mod(l, p)
            vec = [0] * m
            total = 0
            for j in range(l):
                cj = 0
                for s_ in range(l):
                    cj += chi_bar[power_class[i][s_]] * pow(theta_l, (-j * s_) % l, p)
                cj = (cj * inv_l) % p
                total += cj
                if cj:
                    vec[(j * (m // l)) % m] += cj
            if total != deg:
                raise ArithmeticError(
                    "eigenvalue multiplicities of class %d sum to %d, "
                    "expected %d" % (i, total, deg))
            values.append(Cyclotomic(m, vec))
        chars.append(Character(deg, values))

    if sum(ch.degree ** 2 for ch in chars) != G.size:
        raise ArithmeticError("degree check failed: sum of squares != |G|")
    chars.sort(key=lambda ch: (ch.degree, value_key(ch.values, m)))
    return CharacterTable(G, chars, m, p)


# -- caching ------------------------------------------------------------------


_MEM_CACHE = {}


def _cache_path(signature):
    root = os.environ.get("QUASIK_CACHE", "").strip()
    if not root:
        return None
    digest = hashlib.sha256(
        str(signature[0]).encode() + b"|" + signature[1]).hexdigest()
    return os.path.join(root, "chartable-%s.json" % digest)


def _table_to_payload(table):
    return {
        "degree": table.group.degree,
        "order": int(table.group.size),
        "conductor": table.conductor,
        "prime": table.prime,
        "class_reps": [[int(x) for x in table.group.elements[rep]]
                       for rep in table.reps],
        "chars": [
            {"degree": ch.degree,
             "values": [list(v.promote(table.conductor).c) for v in ch.values]}
            for ch in table.chars
        ],
    }


def _table_from_payload(G, payload):
    m = int(payload["conductor"])
    reps = [list(G.elements[int(c[0])]) for c in G.conjugacy_classes]
    if payload["class_reps"] != [[int(x) for x in r] for r in reps]:
        raise ValueError("cached class representatives do not match")
    chars = [
        Character(int(c["degree"]),
                  [Cyclotomic(m, coeffs, _reduced=True)
                   for coeffs in c["values"]])
        for c in payload["chars"]
    ]
    return CharacterTable(G, chars, m, int(payload["prime"]))


def character_table(G):
    """The character table of G, cached by exact element set."""
    sig = G.signature
    table = _MEM_CACHE.get(sig)
    if table is not None and table.group is G:
        return table
    if table is not None:
        # same element set, different instance: rebind cheaply
        rebound = CharacterTable(G, table.chars, table.conductor, table.prime)
        _MEM_CACHE[sig] = rebound
        return rebound
    path = _cache_path(sig)
    if path and os.path.exists(path):
        try:
            with open(path) as fh:
                payload = json.load(fh)
            table = _table_from_payload(G, payload)
        except (ValueError, KeyError, json.JSONDecodeError):
            table = None
    if table is None:
        table = _build_table(G)
        if path:
            os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".",
                                       suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(_table_to_payload(table), fh)
            os.replace(tmp, path)
    _MEM_CACHE[sig] = table
    return table


def pulled_values(src_table, char_idx, elem_map, tgt_group):
    """Values of chi o f on the classes of tgt_group, where f maps element
    indices of tgt_group into src_table's group via elem_map."""
    ch = src_table.chars[char_idx]
    out = []
    for cls in tgt_group.conjugacy_classes:
        rep = int(cls[0])
        out.append(ch.values[int(src_table.class_of[int(elem_map[rep])])])
    return tuple(out)
