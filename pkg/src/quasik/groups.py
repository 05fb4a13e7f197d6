"""Finite permutation groups as exact integer tables.

Everything downstream works on element indices into a lex-sorted array of
permutation image rows, so equality, membership and group arithmetic are
exact integer operations. Conventions, fixed once for the whole package:

* points are acted on from the right, written x.g, and p*q means
  "p then q": (p*q)(x) = q(p(x)).  Action tables therefore satisfy
  action[mult[a,b]] = action[b] o action[a] pointwise.
* conj(g, x) = g x g^-1.
* the canonical representative of an n-tuple under simultaneous
  conjugation is the lex-least tuple of element indices; the identity is
  always element 0, so the identity tuple is always the first
  representative.
"""

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _backend as K

DEFAULT_MAX_ORDER = 10000


class ClosureCapExceeded(RuntimeError):
    """Generator closure grew past the configured element cap."""


def max_order_cap():
    """Element cap for generator closures; QUASIK_MAX_ORDER overrides."""
    raw = os.environ.get("QUASIK_MAX_ORDER", "").strip()
    if not raw:
        return DEFAULT_MAX_ORDER
    cap = int(raw)
    if cap <= 0:
        raise ValueError("QUASIK_MAX_ORDER must be a positive integer")
    return cap


def _validate_perm_row(images, degree):
    row = np.asarray(images, dtype=np.int32)
    if row.shape != (degree,):
        raise ValueError("permutation has %d images, expected %d"
                         % (row.size, degree))
    seen = np.zeros(degree, dtype=bool)
    for v in row:
        if v < 0 or v >= degree or seen[v]:
            raise ValueError("not a permutation of 0..%d: %r"
                             % (degree - 1, list(images)))
        seen[v] = True
    return row


class Perm:
    """A permutation of {0..degree-1}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(int(x) for x in images)
        _validate_perm_row(self.images, len(self.images))

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles):
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __mul__(self, other):
        # self then other
        return Perm(other.images[i] for i in self.images)

    def __call__(self, x):
        return self.images[x]

    def inverse(self):
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Perm(inv)

    def order(self):
        ident = tuple(range(self.degree))
        p = self.images
        n = 1
        while p != ident:
            p = tuple(self.images[i] for i in p)
            n += 1
        return n

    def cycles(self):
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)


def _closure(degree, gen_rows, cap):
    """BFS closure of generator rows under composition, dedup by np.unique."""
    ident = np.arange(degree, dtype=np.int32)[None, :]
    if len(gen_rows) == 0:
        return ident.copy()
    gens = np.array(gen_rows, dtype=np.int32)
    elements = np.unique(np.concatenate([ident, gens]), axis=0)
    frontier = elements
    while True:
        # compose every frontier element with every generator: f then g
        new = np.concatenate([g[frontier] for g in gens], axis=0)
        merged = np.unique(np.concatenate([elements, new]), axis=0)
        if merged.shape[0] > cap:
            raise ClosureCapExceeded(
                "closure exceeded cap of %d elements (set QUASIK_MAX_ORDER "
                "to raise it)" % cap)
        if merged.shape[0] == elements.shape[0]:
            return elements
        # frontier = rows in merged but not in elements
        keys_old = K.find_rows(elements, merged)
        frontier = merged[keys_old < 0]
        elements = merged


class FiniteGroup:
    """A finite permutation group with cached integer tables.

    Elements are the lex-sorted rows of `elements`; index 0 is always the
    identity. Multiplication, inversion, conjugation and commutation
    tables are built lazily.
    """

    def __init__(self, degree, elements, generators=None):
        self.degree = int(degree)
        elements = np.ascontiguousarray(elements, dtype=np.int32)
        order = np.lexsort(elements.T[::-1])
        self.elements = np.ascontiguousarray(elements[order])
        self.size = self.elements.shape[0]
        if not (self.elements[0] == np.arange(self.degree)).all():
            raise ValueError("element set does not contain the identity")
        self.generators = generators

    @classmethod
    def from_generators(cls, degree, gens, max_order=None):
        cap = max_order if max_order is not None else max_order_cap()
        perms = []
        for g in gens:
            if isinstance(g, Perm):
                if g.degree != degree:
                    raise ValueError("generator degree %d != %d"
                                     % (g.degree, degree))
                perms.append(g)
            else:
                perms.append(Perm(_validate_perm_row(g, degree)))
        rows = _closure(degree, [np.array(p.images, dtype=np.int32)
                                 for p in perms], cap)
        return cls(degree, rows, generators=perms)

    @classmethod
    def trivial(cls, degree=1):
        return cls(degree, np.arange(degree, dtype=np.int32)[None, :],
                   generators=[])

    # -- basic tables ---------------------------------------------------

    @cached_property
    def signature(self):
        """Exact identity of the element set, used as a cache key."""
        return (self.degree, self.elements.tobytes())

    @cached_property
    def mult(self):
        return K.mult_table(self.elements)

    @cached_property
    def inv(self):
        n = self.size
        rows = np.empty_like(self.elements)
        ar = np.arange(self.degree)
        for i in range(n):
            rows[i, self.elements[i]] = ar
        out = K.find_rows(self.elements, rows)
        if (out < 0).any():
            raise ValueError("element set not closed under inversion")
        return out

    @cached_property
    def conj(self):
        """conj[g, x] = index of g x g^-1."""
        m = self.mult
        inv = self.inv
        out = np.empty((self.size, self.size), dtype=np.int32)
        for g in range(self.size):
            out[g] = m[m[g], inv[g]]
        return out

    @cached_property
    def comm(self):
        """Boolean matrix: comm[x, y] iff x and y commute."""
        return self.mult == self.mult.T

    @cached_property
    def element_orders(self):
        n = self.size
        out = np.ones(n, dtype=np.int32)
        m = self.mult
        for i in range(n):
            p = i
            k = 1
            while p != 0:
                p = m[p, i]
                k += 1
            out[i] = k
        return out

    # -- element access -------------------------------------------------

    def perm(self, i):
        return Perm(self.elements[i])

    def index(self, images):
        row = np.asarray(images, dtype=np.int32)[None, :]
        idx = K.find_rows(self.elements, row)[0]
        if idx < 0:
            raise KeyError("permutation %r is not in the group"
                           % (list(map(int, row[0])),))
        return int(idx)

    def locate(self, rows):
        """Indices of the given permutation rows; raises if any is absent."""
        idx = K.find_rows(self.elements, np.asarray(rows, dtype=np.int32))
        if (idx < 0).any():
            raise KeyError("some rows are not elements of the group")
        return idx

    def contains(self, images):
        row = np.asarray(images, dtype=np.int32)[None, :]
        return K.find_rows(self.elements, row)[0] >= 0

    def power(self, i, k):
        m = self.mult
        k = k % int(self.element_orders[i])
        acc = 0
        for _ in range(k):
            acc = m[acc, i]
        return int(acc)

    # -- conjugacy structure ---------------------------------------------

    @cached_property
    def class_labels(self):
        """For each element, the least element index of its conjugacy class."""
        return K.point_orbits(self.conj)

    @cached_property
    def conjugacy_classes(self):
        """Sorted classes: list of index arrays, ordered by (size, least rep)."""
        labels = self.class_labels
        reps = np.unique(labels)
        classes = [np.where(labels == r)[0].astype(np.int32) for r in reps]
        classes.sort(key=lambda c: (len(c), int(c[0])))
        return classes

    @cached_property
    def class_of(self):
        out = np.empty(self.size, dtype=np.int32)
        for ci, cls in enumerate(self.conjugacy_classes):
            out[cls] = ci
        return out

    @cached_property
    def exponent(self):
        out = 1
        for o in np.unique(self.element_orders):
            out = _lcm(out, int(o))
        return out

    def center(self):
        return np.where(self.comm.all(axis=1))[0].astype(np.int32)

    def is_abelian(self):
        return bool(self.comm.all())

    # -- subgroups -------------------------------------------------------

    @cached_property
    def _subgroup_cache(self):
        return {}

    def subgroup(self, indices):
        """Subgroup on the given element indices (must be closed)."""
        idx = np.unique(np.asarray(indices, dtype=np.int32))
        key = idx.tobytes()
        cached = self._subgroup_cache.get(key)
        if cached is not None:
            return cached
        if len(idx) == self.size:
            sub = self
        else:
            sub = FiniteGroup(self.degree, self.elements[idx])
            if sub.size != len(idx):
                raise ValueError("indices are not closed under the group law")
        self._subgroup_cache[key] = sub
        return sub

    def centralizer(self, entries):
        """Centralizer of a set of elements, as a subgroup."""
        mask = np.ones(self.size, dtype=bool)
        for e in entries:
            mask &= self.comm[int(e)]
        return self.subgroup(np.where(mask)[0])

    def transporter(self, src, dst):
        """All g with g^-1 src_i g = dst_i for every i; may be empty."""
        m = self.mult
        mask = np.ones(self.size, dtype=bool)
        for a, b in zip(src, dst):
            mask &= m[int(a), :] == m[:, int(b)]
        return np.where(mask)[0].astype(np.int32)

    def all_subgroups(self, up_to_conjugacy=False):
        """Every subgroup, found by growing closures; optionally one per
        conjugacy class of subgroups."""
        trivial = frozenset([0])
        seen = {trivial: self.subgroup([0])}
        frontier = [trivial]
        m = self.mult
        while frontier:
            new = []
            for key in frontier:
                base = list(key)
                for g in range(1, self.size):
                    if g in key:
                        continue
                    grown = frozenset(_index_closure(m, base + [g]))
                    if grown not in seen:
                        seen[grown] = self.subgroup(sorted(grown))
                        new.append(grown)
            frontier = new
        subs = sorted(seen.values(), key=lambda s: (s.size, s.elements.tobytes()))
        if not up_to_conjugacy:
            return subs
        picked = []
        covered = set()
        for s in subs:
            key = frozenset(int(i) for i in self.locate(s.elements))
            if key in covered:
                continue
            picked.append(s)
            for g in range(self.size):
                covered.add(frozenset(int(self.conj[g, i]) for i in key))
        return picked

    # -- generator bookkeeping -------------------------------------------

    @cached_property
    def generator_indices(self):
        gens = self.generators
        if not gens:
            # fall back to the full element list; BFS stays valid
            return np.arange(1, self.size, dtype=np.int32)
        rows = np.array([g.images for g in gens], dtype=np.int32)
        return self.locate(rows)

    @cached_property
    def _bfs(self):
        """Spanning words: visit order, parent element and generator number."""
        m = self.mult
        gens = self.generator_indices
        parent = np.full(self.size, -1, dtype=np.int32)
        genno = np.full(self.size, -1, dtype=np.int32)
        order = [0]
        parent[0] = 0
        head = 0
        while head < len(order):
            a = order[head]
            head += 1
            for k, g in enumerate(gens):
                b = m[a, g]
                if parent[b] < 0:
                    parent[b] = a
                    genno[b] = k
                    order.append(b)
        if len(order) != self.size:
            raise ValueError("generators do not generate the group")
        return np.array(order, dtype=np.int32), parent, genno

    def small_generating_set(self):
        """Greedy generating set, handy for groups built without one."""
        if self.generators:
            return list(self.generator_indices)
        m = self.mult
        chosen = []
        cur = {0}
        for g in range(1, self.size):
            if g in cur:
                continue
            chosen.append(g)
            cur = set(_index_closure(m, chosen))
            if len(cur) == self.size:
                break
        return chosen


def _index_closure(mult, seed):
    cur = {0}
    cur.update(int(s) for s in seed)
    frontier = list(cur)
    while frontier:
        new = []
        for a in frontier:
            for b in list(cur):
                for c in (int(mult[a, b]), int(mult[b, a])):
                    if c not in cur:
                        cur.add(c)
                        new.append(c)
        frontier = new
    return cur


def _lcm(a, b):
    from math import gcd
    return a // gcd(a, b) * b


# -- commuting tuples ------------------------------------------------------


@dataclass(frozen=True)
class CommutingTuple:
    """A pairwise-commuting tuple of group elements, held as indices."""

    group: FiniteGroup
    entries: tuple

    def __post_init__(self):
        comm = self.group.comm
        for i, a in enumerate(self.entries):
            for b in self.entries[i + 1:]:
                if not comm[a, b]:
                    raise ValueError("tuple entries do not commute")

    @property
    def n(self):
        return len(self.entries)

    @property
    def orders(self):
        eo = self.group.element_orders
        return tuple(int(eo[e]) for e in self.entries)

    def perms(self):
        return tuple(self.group.perm(e) for e in self.entries)

    def __repr__(self):
        return "CommutingTuple(%s)" % (", ".join(repr(p) for p in self.perms()) or "e")


def commuting_tuples(G, n):
    """Canonical representatives of commuting n-tuples up to simultaneous
    conjugation, in lex order of index tuples (identity tuple first)."""
    if n == 0:
        return [CommutingTuple(G, ())]
    comm = G.comm
    cand_rows = []

    def extend(prefix, allowed):
        if len(prefix) == n:
            cand_rows.append(prefix)
            return
        for x in np.where(allowed)[0]:
            extend(prefix + (int(x),), allowed & comm[x])

    extend((), np.ones(G.size, dtype=bool))
    cand = np.array(cand_rows, dtype=np.int32).reshape(len(cand_rows), n)
    mask = K.minimal_tuple_mask(G.conj, cand)
    return [CommutingTuple(G, tuple(int(v) for v in row))
            for row in cand[mask]]


def canonical_tuple(G, entries):
    """Lex-least simultaneous conjugate of `entries` plus a witness g with
    g entries g^-1 = canonical (the least such g)."""
    entries = tuple(int(e) for e in entries)
    if not entries:
        return CommutingTuple(G, ()), 0
    conjed = G.conj[:, list(entries)]
    order = np.lexsort(conjed.T[::-1])
    g = int(order[0])
    best = tuple(int(v) for v in conjed[g])
    return CommutingTuple(G, best), g


def count_commuting_tuples(G, n):
    """Number of commuting n-tuple classes by Burnside counting.

    Independent of the canonicalization path: counts fixed tuples of each
    conjugation and averages. Fix(g) is the set of commuting n-tuples with
    all entries in C(g), counted by recursion over centralizer chains.
    """
    comm = G.comm
    memo = {}

    def tuples_in(mask, k):
        if k == 0:
            return 1
        key = (mask.tobytes(), k)
        if key in memo:
            return memo[key]
        total = 0
        for x in np.where(mask)[0]:
            total += tuples_in(mask & comm[x], k - 1)
        memo[key] = total
        return total

    acc = 0
    for g in range(G.size):
        acc += tuples_in(comm[g], n)
    quo, rem = divmod(acc, G.size)
    if rem:
        raise ArithmeticError("Burnside sum not divisible by group order")
    return quo


# -- homomorphisms ----------------------------------------------------------


class GroupHom:
    """A homomorphism between finite permutation groups, as an index map."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = np.ascontiguousarray(images, dtype=np.int32)
        if self.images.shape != (source.size,):
            raise ValueError("image table has wrong length")

    @classmethod
    def from_gen_images(cls, source, target, gen_images):
        """Extend images of the source generators; raises ValueError when
        the assignment is not a homomorphism."""
        gens = source.generator_indices
        if len(gen_images) != len(gens):
            raise ValueError("expected %d generator images, got %d"
                             % (len(gens), len(gen_images)))
        img_idx = []
        for gi in gen_images:
            if isinstance(gi, Perm):
                img_idx.append(target.index(gi.images))
            elif isinstance(gi, (int, np.integer)):
                img_idx.append(int(gi))
            else:
                img_idx.append(target.index(gi))
        order, parent, genno = source._bfs
        images = np.full(source.size, -1, dtype=np.int32)
        images[0] = 0
        mt = target.mult
        for b in order[1:]:
            images[b] = mt[images[parent[b]], img_idx[genno[b]]]
        ms = source.mult
        for k, g in enumerate(gens):
            if not (images[ms[:, g]] == mt[images, img_idx[k]]).all():
                raise ValueError("generator images do not define a homomorphism")
        return cls(source, target, images)

    @classmethod
    def inclusion(cls, sub, G):
        return cls(sub, G, G.locate(sub.elements))

    def __call__(self, i):
        return int(self.images[int(i)])

    def is_injective(self):
        return len(np.unique(self.images)) == self.source.size

    def then(self, other):
        """Composite source -> other.target (self first)."""
        if other.source is not self.target and \
                other.source.signature != self.target.signature:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(self.source, other.target, other.images[self.images])


# -- G-sets -----------------------------------------------------------------


class GSet:
    """A finite right G-set as a full action table action[g, p] = p.g."""

    def __init__(self, group, npoints, action):
        self.group = group
        self.npoints = int(npoints)
        self.action = np.ascontiguousarray(action, dtype=np.int32)
        if self.action.shape != (group.size, self.npoints):
            raise ValueError("action table has wrong shape")

    @cached_property
    def signature(self):
        return (self.npoints, self.action.tobytes())

    @classmethod
    def from_generator_action(cls, group, npoints, gen_rows):
        rows = [_validate_perm_row(r, npoints) for r in gen_rows]
        if len(rows) != len(group.generator_indices):
            raise ValueError("expected %d generator rows, got %d"
                             % (len(group.generator_indices), len(rows)))
        order, parent, genno = group._bfs
        action = np.empty((group.size, npoints), dtype=np.int32)
        action[0] = np.arange(npoints)
        for b in order[1:]:
            action[b] = rows[genno[b]][action[parent[b]]]
        m = group.mult
        for k, g in enumerate(group.generator_indices):
            if not (action[m[:, g]] == rows[k][action]).all():
                raise ValueError("generator action rows do not define a G-set")
        return cls(group, npoints, action)

    @classmethod
    def point(cls, group):
        return cls(group, 1, np.zeros((group.size, 1), dtype=np.int32))

    @classmethod
    def empty(cls, group):
        return cls(group, 0, np.zeros((group.size, 0), dtype=np.int32))

    @classmethod
    def regular(cls, group):
        # x.g = x*g
        return cls(group, group.size, group.mult.T.copy())

    @classmethod
    def cosets(cls, group, sub):
        """Right cosets Hg as a right G-set, H given as a subgroup."""
        hidx = group.locate(sub.elements)
        labels = K.point_orbits(group.mult[hidx, :])
        reps = np.unique(labels)
        coset_of = np.searchsorted(reps, labels).astype(np.int32)
        # action[g, c] = coset of rep_c * g
        action = coset_of[group.mult[reps].T]
        return cls(group, len(reps), np.ascontiguousarray(action))

    def restrict(self, hom):
        """Pullback along hom: the same points as a hom.source-set."""
        return GSet(hom.source, self.npoints, self.action[hom.images])

    def fixed(self, entries):
        mask = np.ones(self.npoints, dtype=bool)
        ar = np.arange(self.npoints)
        for e in entries:
            mask &= self.action[int(e)] == ar
        return np.where(mask)[0].astype(np.int32)

    def orbit_labels(self):
        return K.point_orbits(self.action)

    def orbits(self):
        labels = self.orbit_labels()
        reps = np.unique(labels)
        return [np.where(labels == r)[0].astype(np.int32) for r in reps]

    def is_free(self):
        ar = np.arange(self.npoints)
        for g in range(1, self.group.size):
            if (self.action[g] == ar).any():
                return False
        return True

    def is_trivial(self):
        ar = np.arange(self.npoints)
        return bool((self.action == ar[None, :]).all())

    def quotient(self):
        """Orbit set as a set over the trivial group, plus the projection."""
        labels = self.orbit_labels()
        reps = np.unique(labels)
        proj = np.searchsorted(reps, labels).astype(np.int32)
        triv = FiniteGroup.trivial()
        return GSet(triv, len(reps), np.arange(len(reps), dtype=np.int32)[None, :]), proj

    def product(self, other, prod_group):
        """Product set over a direct product group built by direct_product."""
        G, H = prod_group.factors
        if G is not self.group or H is not other.group:
            raise ValueError("product group factors do not match the G-sets")
        P, Q = self.npoints, other.npoints
        action = np.empty((prod_group.size, P * Q), dtype=np.int32)
        for ia in range(G.size):
            base = self.action[ia] * Q
            for ib in range(H.size):
                action[ia * H.size + ib] = np.add.outer(
                    base, other.action[ib]).ravel()
        return GSet(prod_group, P * Q, action)


def subgroup_orbits(action, element_rows, points):
    """Orbits of a subset of group elements on a subset of points.

    element_rows are row indices into the action table (must be closed
    under inversion as a set); points must be invariant. Returns orbits as
    sorted global point arrays, ordered by least point.
    """
    points = np.asarray(points, dtype=np.int32)
    if len(points) == 0:
        return []
    sub = action[np.asarray(element_rows, dtype=np.int32)][:, points]
    local = np.searchsorted(points, sub).astype(np.int32)
    if not (points[local] == sub).all():
        raise ValueError("point set is not invariant")
    labels = K.point_orbits(local)
    out = []
    for r in np.unique(labels):
        out.append(points[np.where(labels == r)[0]])
    return out


# -- direct products and induction -----------------------------------------


def direct_product(G, H):
    """Direct product as a permutation group on the disjoint union of the
    factor domains. Element index (a, b) -> a*|H| + b."""
    dG, dH = G.degree, H.degree
    left = np.repeat(G.elements, H.size, axis=0)
    right = np.tile(H.elements + dG, (G.size, 1))
    rows = np.concatenate([left, right], axis=1)
    gens = []
    for g in (G.generators or []):
        gens.append(Perm(tuple(g.images) + tuple(range(dG, dG + dH))))
    for h in (H.generators or []):
        gens.append(Perm(tuple(range(dG)) + tuple(x + dG for x in h.images)))
    GH = FiniteGroup(dG + dH, rows, generators=gens or None)
    if GH.size != G.size * H.size:
        raise AssertionError("product element table collapsed")
    GH.factors = (G, H)
    return GH


def product_index(GH, a, b):
    return int(a) * GH.factors[1].size + int(b)


def product_split(GH, idx):
    a, b = divmod(int(idx), GH.factors[1].size)
    return a, b


@dataclass
class Induction:
    """X x_H G for a subgroup H <= G acting on X from the right.

    Points are pairs (coset Hg, x) flattened as pid = coset*|X| + x, with
    coset 0 the coset of the identity, so x -> x is the canonical
    injection of X.
    """

    gset: GSet
    point_of_x: np.ndarray
    coset_reps: np.ndarray
    coset_of: np.ndarray


def induced_gset(G, sub, X):
    """Induce a right sub-set X up to G along the inclusion sub <= G."""
    if X.group is not sub and X.group.signature != sub.signature:
        raise ValueError("X is not a set over the given subgroup")
    hidx = G.locate(sub.elements)
    m = G.mult
    labels = K.point_orbits(m[hidx, :])
    reps = np.unique(labels)
    coset_of = np.searchsorted(reps, labels).astype(np.int32)
    ncos = len(reps)
    P = X.npoints
    inv = G.inv
    # local index of an ambient element that lies in sub
    local = {int(g): i for i, g in enumerate(hidx)}
    action = np.empty((G.size, ncos * P), dtype=np.int32)
    for gp in range(G.size):
        for c in range(ncos):
            t = int(m[reps[c], gp])
            c2 = int(coset_of[t])
            h = int(m[t, inv[reps[c2]]])
            hloc = local[h]
            action[gp, c * P:(c + 1) * P] = c2 * P + X.action[hloc]
    gset = GSet(G, ncos * P, action)
    return Induction(gset=gset,
                     point_of_x=np.arange(P, dtype=np.int32),
                     coset_reps=reps.astype(np.int32),
                     coset_of=coset_of)
