"""Quasi-theory rings over equivariant K-theory and the maps between them.

QK_{n,G}(X) is presented componentwise: one free Z[q_1^+-..q_n^+-]-module
per skeleton component of the n-fold loop groupoid, with basis the
irreducibles of the component's stabilizer. Multiplication is
componentwise with integral q-shifts from the central characters.

All theory maps here arise from a morphism of quotients
(phi: G -> H, f: X' -> X with f(x.g) = f(x).phi(g)) and are computed by
transporting each target component to a canonical source component with
explicit witnesses, then pulling irreducibles back through the induced
stabilizer homomorphism. Restriction, basepoint pullback and
change-of-group are all instances; the Kunneth factorization map has its
own bilinear construction.
"""

import random
from fractions import Fraction

import numpy as np

from .chartable import character_table, pulled_values, value_key
from .cyclotomic import lcm
from .groups import (GSet, GroupHom, canonical_tuple, count_commuting_tuples,
                     direct_product, induced_gset, product_split)
from .laurent import LambdaModule, LaurentPoly, laurent_det
from .loopspace import lambda_skeleton


class ComponentModule:
    """A skeleton component together with its free module."""

    __slots__ = ("skeleton", "module")

    def __init__(self, skeleton_comp):
        self.skeleton = skeleton_comp
        sigma_local = np.searchsorted(
            skeleton_comp.stabilizer_indices,
            np.asarray(skeleton_comp.sigma.entries, dtype=np.int32))
        sidx = skeleton_comp.stabilizer_indices
        for k, e in zip(sigma_local, skeleton_comp.sigma.entries):
            if int(sidx[int(k)]) != int(e):
                raise AssertionError("tuple entry missing from its stabilizer")
        self.module = LambdaModule(skeleton_comp.stabilizer,
                                   [int(k) for k in sigma_local])

    @property
    def sigma(self):
        return self.skeleton.sigma

    @property
    def rank(self):
        return self.module.rank


class QTheoryRing:
    """QK_{n,G}(X) with exact componentwise arithmetic."""

    def __init__(self, G, X, n):
        self.group = G
        self.gset = X
        self.n = int(n)
        self.skeleton = lambda_skeleton(G, X, n)
        self.components = [ComponentModule(c) for c in self.skeleton.components]
        self.total_rank = sum(c.rank for c in self.components)
        self._lookup = {}
        for ci, comp in enumerate(self.components):
            per_sigma = self._lookup.setdefault(comp.sigma.entries, {})
            for p in comp.skeleton.orbit:
                per_sigma[int(p)] = ci

    def comp_index(self, entries, point):
        """Component containing (sigma, point); sigma must be canonical."""
        per_sigma = self._lookup.get(tuple(int(e) for e in entries))
        if per_sigma is None:
            raise KeyError("no component at the given tuple")
        return per_sigma[int(point)]

    # -- elements ---------------------------------------------------------

    def zero(self):
        return QClass(self, {})

    def unit(self):
        coords = {ci: comp.module.unit()
                  for ci, comp in enumerate(self.components)}
        return QClass(self, coords)

    def q(self, i):
        """pi^* q_i: the i-th base-ring variable, as a class."""
        if not (0 <= i < self.n):
            raise IndexError("variable index out of range")
        exps = tuple(1 if k == i else 0 for k in range(self.n))
        mono = LaurentPoly.monomial(exps)
        coords = {ci: comp.module.pi_star(mono)
                  for ci, comp in enumerate(self.components)}
        return QClass(self, coords)

    def pi_star(self, poly):
        coords = {ci: comp.module.pi_star(poly)
                  for ci, comp in enumerate(self.components)}
        return QClass(self, {ci: c for ci, c in coords.items() if c})

    def basis_class(self, ci, bi):
        comp = self.components[ci]
        if not (0 <= bi < comp.rank):
            raise IndexError("basis index out of range")
        return QClass(self, {ci: {bi: LaurentPoly.one(self.n)}})

    def random_class(self, rng, max_components=3, max_terms=2):
        if not self.components:
            return self.zero()
        ncomp = rng.randint(1, min(max_components, len(self.components)))
        chosen = rng.sample(range(len(self.components)), ncomp)
        coords = {}
        for ci in chosen:
            comp = self.components[ci]
            vec = {}
            for _ in range(rng.randint(1, max_terms)):
                bi = rng.randrange(comp.rank)
                terms = {}
                for _ in range(rng.randint(1, 3)):
                    e = tuple(rng.randint(-2, 2) for _ in range(self.n))
                    c = rng.choice([-3, -2, -1, 1, 2, 3])
                    terms[e] = terms.get(e, 0) + c
                poly = LaurentPoly(self.n, terms)
                if poly.is_zero():
                    continue
                prev = vec.get(bi)
                vec[bi] = poly if prev is None else prev + poly
            vec = {k: v for k, v in vec.items() if not v.is_zero()}
            if vec:
                coords[ci] = vec
        return QClass(self, coords)

    def to_json(self):
        from .jsonio import ring_to_json
        return ring_to_json(self)


class QClass:
    """An element of a quasi-theory ring: coords[component][basis] = poly."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        clean = {}
        for ci, vec in coords.items():
            vec = {int(b): p for b, p in vec.items() if not p.is_zero()}
            if vec:
                clean[int(ci)] = vec
        self.coords = clean

    def _binop(self, other, fn):
        if other.ring is not self.ring:
            raise ValueError("classes live in different rings")
        out = {}
        for ci in set(self.coords) | set(other.coords):
            mod = self.ring.components[ci].module
            v = fn(mod, self.coords.get(ci, {}), other.coords.get(ci, {}))
            if v:
                out[ci] = v
        return QClass(self.ring, out)

    def __add__(self, other):
        return self._binop(other, lambda m, a, b: m.add(a, b))

    def __sub__(self, other):
        return self._binop(other, lambda m, a, b: m.add(a, m.neg(b)))

    def __neg__(self):
        return QClass(self.ring,
                      {ci: self.ring.components[ci].module.neg(v)
                       for ci, v in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            c = LaurentPoly.const(self.ring.n, other)
            return QClass(self.ring,
                          {ci: self.ring.components[ci].module.scale(c, v)
                           for ci, v in self.coords.items()})
        out = {}
        for ci, v in self.coords.items():
            w = other.coords.get(ci)
            if w is None:
                continue
            prod = self.ring.components[ci].module.mul(v, w)
            if prod:
                out[ci] = prod
        return QClass(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, QClass) and self.ring is other.ring
                and self.coords == other.coords)

    __hash__ = None

    def is_zero(self):
        return not self.coords

    def to_json(self):
        from .jsonio import class_to_json
        return class_to_json(self)


_RING_CACHE = {}


def qk_compute(G, X, n):
    """The ring QK_{n,G}(X), cached by exact group and action tables."""
    key = (G.signature, X.signature, int(n))
    ring = _RING_CACHE.get(key)
    if ring is None:
        ring = QTheoryRing(G, X, n)
        _RING_CACHE[key] = ring
    return ring


def clear_ring_cache():
    _RING_CACHE.clear()


# -- generic transport maps ---------------------------------------------------


class QTheoryMap:
    """A module map between quasi-theory rings, stored blockwise.

    rows[t_ci] = (s_ci, {s_bi: ((t_bi, poly), ...)}): the target component
    t_ci receives the source component s_ci, and the source basis element
    s_bi lands on the given combination of target basis elements.
    """

    def __init__(self, source, target, rows, label):
        self.source = source
        self.target = target
        self.rows = rows
        self.label = label

    def apply(self, x):
        if x.ring is not self.source:
            raise ValueError("class does not live in the source ring")
        out = {}
        for t_ci, (s_ci, rowmap) in self.rows.items():
            vec = x.coords.get(s_ci)
            if not vec:
                continue
            acc = {}
            for s_bi, poly in vec.items():
                for t_bi, coeff in rowmap.get(s_bi, ()):
                    term = poly * coeff
                    prev = acc.get(t_bi)
                    acc[t_bi] = term if prev is None else prev + term
            acc = {b: p for b, p in acc.items() if not p.is_zero()}
            if acc:
                out[t_ci] = acc
        return QClass(self.target, out)

    def source_blocks(self):
        """Target components grouped by the source component feeding them."""
        blocks = {}
        for t_ci, (s_ci, _) in self.rows.items():
            blocks.setdefault(s_ci, []).append(t_ci)
        for v in blocks.values():
            v.sort()
        return blocks

    def block_matrix(self, s_ci, t_cis):
        """Rows = target basis elements across t_cis, cols = source basis."""
        cols = self.source.components[s_ci].rank
        rows = []
        for t_ci in t_cis:
            _, rowmap = self.rows[t_ci]
            rank_t = self.target.components[t_ci].rank
            block = [[LaurentPoly.zero(self.source.n) for _ in range(cols)]
                     for _ in range(rank_t)]
            for s_bi, hits in rowmap.items():
                for t_bi, coeff in hits:
                    block[t_bi][s_bi] = block[t_bi][s_bi] + coeff
            rows.extend(block)
        return rows

    def is_bijective(self):
        """True when the map is an isomorphism of free modules: every block
        is square with unit determinant and every source component is hit."""
        blocks = self.source_blocks()
        if set(blocks) != set(range(len(self.source.components))):
            return False
        for s_ci, t_cis in blocks.items():
            cols = self.source.components[s_ci].rank
            rows_total = sum(self.target.components[t].rank for t in t_cis)
            if rows_total != cols:
                return False
            det = laurent_det(self.block_matrix(s_ci, t_cis))
            if not det.is_unit():
                return False
        return True

    def equal_on_basis(self, other):
        """Map equality tested on every source basis class."""
        if self.source is not other.source or self.target is not other.target:
            return False
        for ci, comp in enumerate(self.source.components):
            for bi in range(comp.rank):
                x = self.source.basis_class(ci, bi)
                if not self.apply(x) == other.apply(x):
                    return False
        return True

    def report(self):
        from .jsonio import map_report
        return map_report(self)


def _stab_local(comp, ambient_index):
    sidx = comp.skeleton.stabilizer_indices
    k = int(np.searchsorted(sidx, ambient_index))
    if k >= len(sidx) or int(sidx[k]) != int(ambient_index):
        raise AssertionError("element is not in the component stabilizer")
    return k


def _transport_rows(source, s_ci, target, t_ci, psi_local):
    """Rows of the transport map on one component pair.

    psi_local maps local stabilizer indices of the target component to
    local stabilizer indices of the source component and must intertwine
    the tuple entries; the q-degrees of matched basis elements then agree
    and the matrix over Z[q^+-] is the constant character-decomposition
    matrix.
    """
    smod = source.components[s_ci].module
    tmod = target.components[t_ci].module
    n = source.n
    rows = {}
    for mu in range(smod.rank):
        vals = pulled_values(smod.table, mu, psi_local, tmod.group)
        decomp = tmod.table.decompose_values(vals)
        q_mu = smod.basis[mu].q_degree
        hits = []
        for nu, mult in decomp:
            if tmod.basis[nu].q_degree != q_mu:
                raise AssertionError(
                    "transport broke the q-degree grading: %s vs %s"
                    % (tmod.basis[nu].q_degree, q_mu))
            hits.append((nu, LaurentPoly.const(n, mult)))
        rows[mu] = tuple(hits)
    return rows


def theory_map(source, target, phi, point_map, label):
    """The map QK_{n,H}(X) -> QK_{n,G}(X') induced by a morphism of
    quotients (phi: G -> H, f: X' -> X with f(x.g) = f(x).phi(g)).

    source is the ring over (H, X), target the ring over (G, X').
    """
    G = target.group
    H = source.group
    X_src = source.gset
    X_tgt = target.gset
    if phi.source.signature != G.signature or \
            phi.target.signature != H.signature:
        raise ValueError("phi does not connect the two rings")
    point_map = np.asarray(point_map, dtype=np.int32)
    if point_map.shape != (X_tgt.npoints,):
        raise ValueError("point map has wrong length")
    # equivariance: f(x.g) = f(x).phi(g)
    for g in G.generator_indices:
        if not (point_map[X_tgt.action[g]] ==
                X_src.action[phi(g)][point_map]).all():
            raise ValueError("point map is not equivariant along phi")

    mH = H.mult
    invH = H.inv
    conjH = H.conj
    rows = {}
    for t_ci, tcomp in enumerate(target.components):
        sigma = tcomp.sigma.entries
        upsilon = tuple(phi(e) for e in sigma)
        tau, w = canonical_tuple(H, upsilon)
        y = int(point_map[tcomp.skeleton.orbit_rep])
        y0 = int(X_src.action[invH[w], y])
        s_ci = source.comp_index(tau.entries, y0)
        scomp = source.components[s_ci]
        u = scomp.skeleton.transversal[y0]
        t = int(mH[u, w])
        # psi(s) = t phi(s) t^-1 sends the target stabilizer into the
        # source stabilizer and the tuple entries to the canonical ones
        tsidx = tcomp.skeleton.stabilizer_indices
        psi = np.empty(len(tsidx), dtype=np.int32)
        for j, amb in enumerate(tsidx):
            hh = int(conjH[t, phi(int(amb))])
            psi[j] = _stab_local(scomp, hh)
        rows[t_ci] = (s_ci, _transport_rows(source, s_ci, target, t_ci, psi))
    return QTheoryMap(source, target, rows, label)


def compose_maps(first, second):
    """second o first, both QTheoryMaps with matching middle ring."""
    if first.target is not second.source:
        raise ValueError("maps are not composable")
    rows = {}
    for t_ci, (m_ci, rows2) in second.rows.items():
        s_ci, rows1 = first.rows.get(m_ci, (None, None))
        if s_ci is None:
            continue
        combined = {}
        for s_bi, hits1 in rows1.items():
            acc = {}
            for m_bi, p1 in hits1:
                for t_bi, p2 in rows2.get(m_bi, ()):
                    prod = p1 * p2
                    prev = acc.get(t_bi)
                    acc[t_bi] = prod if prev is None else prev + prod
            combined[s_bi] = tuple(sorted(
                ((b, p) for b, p in acc.items() if not p.is_zero())))
        rows[t_ci] = (s_ci, combined)
    return QTheoryMap(first.source, second.target, rows,
                      "%s;%s" % (first.label, second.label))


def restriction_map(phi, X, n):
    """phi^*: QK_{n,H}(X) -> QK_{n,G}(phi^*X) for phi: G -> H."""
    source = qk_compute(phi.target, X, n)
    target = qk_compute(phi.source, X.restrict(phi), n)
    ident = np.arange(X.npoints, dtype=np.int32)
    return theory_map(source, target, phi, ident, "restriction")


def change_of_group_map(G, sub, X, n):
    """rho: QK_{n,G}(X x_H G) -> QK_{n,H}(X) for a subgroup H = sub <= G.

    Returns (map, induced) where induced is the Induction bookkeeping.
    """
    ind = induced_gset(G, sub, X)
    incl = GroupHom.inclusion(sub, G)
    source = qk_compute(G, ind.gset, n)
    target = qk_compute(sub, X, n)
    rho = theory_map(source, target, incl, ind.point_of_x, "change-of-group")
    return rho, ind


# -- Kunneth ------------------------------------------------------------------


class KunnethMap:
    """T: QK_{n,G}(X) (x) QK_{n,H}(Y) -> QK_{n,GxH}(XxY).

    rows[t_ci] = (cG, cH, {(bG, bH): (t_bi, monomial)}); every target basis
    element is hit exactly once, so each block is a monomial permutation
    matrix.
    """

    def __init__(self, ring_g, ring_h, target, rows):
        self.ring_g = ring_g
        self.ring_h = ring_h
        self.target = target
        self.rows = rows

    def apply(self, x, y):
        if x.ring is not self.ring_g or y.ring is not self.ring_h:
            raise ValueError("arguments live in the wrong rings")
        out = {}
        for t_ci, (cg, ch, rowmap) in self.rows.items():
            xv = x.coords.get(cg)
            yv = y.coords.get(ch)
            if not xv or not yv:
                continue
            acc = {}
            for bg, p in xv.items():
                for bh, q in yv.items():
                    t_bi, mono = rowmap[(bg, bh)]
                    term = p * q * mono
                    prev = acc.get(t_bi)
                    acc[t_bi] = term if prev is None else prev + term
            acc = {b: v for b, v in acc.items() if not v.is_zero()}
            if acc:
                out[t_ci] = acc
        return QClass(self.target, out)

    def source_blocks(self):
        blocks = {}
        for t_ci, (cg, ch, _) in self.rows.items():
            blocks.setdefault((cg, ch), []).append(t_ci)
        for v in blocks.values():
            v.sort()
        return blocks

    def is_bijective(self):
        blocks = self.source_blocks()
        want = {(cg, ch)
                for cg in range(len(self.ring_g.components))
                for ch in range(len(self.ring_h.components))}
        if set(blocks) != want:
            return False
        n = self.target.n
        for (cg, ch), t_cis in blocks.items():
            rg = self.ring_g.components[cg].rank
            rh = self.ring_h.components[ch].rank
            rows_total = sum(self.target.components[t].rank for t in t_cis)
            if rows_total != rg * rh:
                return False
            # columns indexed by (bg, bh), rows by target basis
            colof = {}
            for bg in range(rg):
                for bh in range(rh):
                    colof[(bg, bh)] = bg * rh + bh
            mat = [[LaurentPoly.zero(n) for _ in range(rg * rh)]
                   for _ in range(rows_total)]
            base = 0
            for t_ci in t_cis:
                _, _, rowmap = self.rows[t_ci]
                for (bg, bh), (t_bi, mono) in rowmap.items():
                    mat[base + t_bi][colof[(bg, bh)]] = \
                        mat[base + t_bi][colof[(bg, bh)]] + mono
                base += self.target.components[t_ci].rank
            if not laurent_det(mat).is_unit():
                return False
        return True


def kunneth_map(ring_g, ring_h):
    """Build the factorization map onto QK over the product group."""
    G = ring_g.group
    H = ring_h.group
    if ring_g.n != ring_h.n:
        raise ValueError("factor rings have different n")
    n = ring_g.n
    GH = direct_product(G, H)
    XY = ring_g.gset.product(ring_h.gset, GH)
    target = qk_compute(GH, XY, n)
    Q = ring_h.gset.npoints
    invG = G.inv
    invH = H.inv
    # memo for irreducible identification keyed by exact value tuples
    prod_memo = {}

    rows = {}
    for t_ci, tcomp in enumerate(target.components):
        omega = tcomp.sigma.entries
        sig_g = tuple(product_split(GH, e)[0] for e in omega)
        sig_h = tuple(product_split(GH, e)[1] for e in omega)
        z = int(tcomp.skeleton.orbit_rep)
        x, y = divmod(z, Q) if Q else (0, 0)
        side_g = _kunneth_side(ring_g, sig_g, x, invG)
        side_h = _kunneth_side(ring_h, sig_h, y, invH)
        cg, psi_g, gcomp = side_g
        ch, psi_h, hcomp = side_h
        tsidx = tcomp.skeleton.stabilizer_indices
        ttable = tcomp.module.table
        tmod = tcomp.module
        L = lcm(ttable.conductor,
                lcm(gcomp.module.table.conductor, hcomp.module.table.conductor))
        tindex = ttable.value_index_at(L)
        # class reps of the target stabilizer, split into factors
        reps_split = []
        for cls in tmod.group.conjugacy_classes:
            amb = int(tsidx[int(cls[0])])
            reps_split.append(product_split(GH, amb))
        rowmap = {}
        for bg in range(gcomp.rank):
            valg = _pulled_on_elements(gcomp, bg, psi_g)
            for bh in range(hcomp.rank):
                valh = _pulled_on_elements(hcomp, bh, psi_h)
                memo_key = (tcomp.skeleton.stabilizer.signature,
                            valg[1], valh[1])
                hit = prod_memo.get(memo_key)
                if hit is None:
                    vals = []
                    for (a, b) in reps_split:
                        vals.append(valg[0][a] * valh[0][b])
                    t_bi = tindex.get(value_key(vals, L))
                    if t_bi is None:
                        raise AssertionError(
                            "product of irreducibles not found in the "
                            "product stabilizer table")
                    hit = t_bi
                    prod_memo[memo_key] = hit
                t_bi = hit
                q_g = gcomp.module.basis[bg].q_degree
                q_h = hcomp.module.basis[bh].q_degree
                q_t = tmod.basis[t_bi].q_degree
                carry = []
                for a, b, c in zip(q_g, q_h, q_t):
                    s = a + b
                    if s - c != int(s - c):
                        raise AssertionError("q-degree mismatch in Kunneth")
                    carry.append(int(s - c))
                rowmap[(bg, bh)] = (t_bi, LaurentPoly.monomial(tuple(carry)))
        rows[t_ci] = (cg, ch, rowmap)
    return KunnethMap(ring_g, ring_h, target, rows)


def _kunneth_side(ring, entries, point, inv):
    """Locate the factor component and the transport psi for one side."""
    Gf = ring.group
    canon, w = canonical_tuple(Gf, entries)
    p0 = int(ring.gset.action[inv[w], point])
    ci = ring.comp_index(canon.entries, p0)
    comp = ring.components[ci]
    u = comp.skeleton.transversal[p0]
    t = int(Gf.mult[u, w])
    return ci, (t, Gf), comp


def _pulled_on_elements(comp, bi, psi):
    """Lazy table a -> chi(t a t^-1) for basis char bi of comp, plus an
    exact memo key identifying the pulled character."""
    t, Gf = psi
    table = comp.module.table
    sidx = comp.skeleton.stabilizer_indices
    ch = table.chars[comp.module.basis[bi].char_index]
    key = (comp.skeleton.stabilizer.signature, t, bi)
    return _PulledValues(table, ch, t, Gf.conj, sidx), key


class _PulledValues:
    """Lazy map: ambient factor element a -> chi(t a t^-1), exact."""

    __slots__ = ("table", "ch", "t", "conj", "sidx", "cache")

    def __init__(self, table, ch, t, conj, sidx):
        self.table = table
        self.ch = ch
        self.t = t
        self.conj = conj
        self.sidx = sidx
        self.cache = {}

    def __getitem__(self, a):
        v = self.cache.get(a)
        if v is None:
            moved = int(self.conj[self.t, int(a)])
            k = int(np.searchsorted(self.sidx, moved))
            if k >= len(self.sidx) or int(self.sidx[k]) != moved:
                raise AssertionError("conjugated element left the stabilizer")
            v = self.ch.values[int(self.table.class_of[k])]
            self.cache[a] = v
        return v


# -- splittings and export ----------------------------------------------------


def verify_free_action(G, X, n):
    """True iff the theory of a free action collapses to the quotient."""
    ok, _ = free_action_report(G, X, n)
    return ok


def free_action_report(G, X, n):
    """Free actions collapse to the quotient: components live only at the
    identity tuple with trivial stabilizers, and the rank is |X/G|."""
    if not X.is_free():
        raise ValueError("action is not free")
    ring = qk_compute(G, X, n)
    ident = (0,) * n
    details = []
    ok = True
    for comp in ring.components:
        if comp.sigma.entries != ident:
            ok = False
            details.append("component at nonidentity tuple %r"
                           % (comp.sigma.entries,))
        if comp.skeleton.stabilizer.size != 1:
            ok = False
            details.append("nontrivial stabilizer of size %d"
                           % comp.skeleton.stabilizer.size)
    quotient, _ = X.quotient()
    qring = qk_compute(quotient.group, quotient, n)
    if ring.total_rank != qring.total_rank:
        ok = False
        details.append("rank %d != quotient rank %d"
                       % (ring.total_rank, qring.total_rank))
    norbits = len(X.orbits())
    if ring.total_rank != norbits:
        ok = False
        details.append("rank %d != orbit count %d"
                       % (ring.total_rank, norbits))
    return ok, details


def verify_trivial_action_split(G, H, X, n):
    """True iff a trivially-acting second factor splits off as a tensor
    factor: QK_{n,GxH}(X) = QK_{n,G}(X) (x) QK_{n,H}(pt).

    X must be a set over direct_product(G, H); raises ValueError when the
    H factor acts nontrivially.
    """
    GH = direct_product(G, H)
    if X.group.signature != GH.signature:
        raise ValueError("X is not a set over the product of G and H")
    idG = tuple(range(G.degree))
    idH = tuple(x + G.degree for x in range(H.degree))
    pts = np.arange(X.npoints)
    for h in range(H.size):
        gh = GH.index(idG + tuple(int(x) + G.degree for x in H.elements[h]))
        if not (X.action[gh] == pts).all():
            raise ValueError("the second factor does not act trivially")
    first = [GH.index(tuple(G.elements[g]) + idH) for g in range(G.size)]
    XG = GSet(G, X.npoints, X.action[np.asarray(first, dtype=np.int64)])
    ra = qk_compute(G, XG, n)
    rb = qk_compute(H, GSet.point(H), n)
    km = kunneth_map(ra, rb)
    if km.target.gset.signature != X.signature:
        return False
    return (km.target.total_rank == ra.total_rank * rb.total_rank
            and km.is_bijective())


def tate_export(ring):
    """Serialize QK_{1,G}(X) with coefficients extended to Z((q)).

    Only n = 1 admits the one-variable Laurent completion; the basis and
    q-degrees are unchanged, so the export lists each basis symbol with
    its fractional degree over the completed coefficient ring.
    """
    if ring.n != 1:
        raise ValueError("Tate export is defined for n = 1 only")
    from .jsonio import tate_to_json
    return tate_to_json(ring)


def rank_identity_holds(G, n):
    """rank QK_{n,G}(pt) equals the number of commuting (n+1)-tuple classes."""
    ring = qk_compute(G, GSet.point(G), n)
    return ring.total_rank == count_commuting_tuples(G, n + 1)


def random_seeded(seed):
    return random.Random(seed)
