"""Skeleton of the n-fold loop groupoid of a global quotient X//G.

Objects are pairs (sigma, x) with sigma a commuting n-tuple and x a point
fixed by every entry; isomorphism classes are (conjugacy class of sigma,
centralizer orbit of x). Each class carries the stabilizer of x inside the
centralizer, which is the group whose representations generate the
attached module.

iterated_component_count recomputes the number of classes by peeling one
tuple entry at a time (fixed points, then centralizer recursion) and
fusing the resulting nested components into simultaneous-conjugacy
classes. It shares no logic with the direct skeleton construction, so the
two counts crosscheck each other.
"""

from dataclasses import dataclass, field

import numpy as np

from .groups import (CommutingTuple, FiniteGroup, GSet, canonical_tuple,
                     commuting_tuples, subgroup_orbits)


@dataclass
class SkeletonComponent:
    """One isomorphism class of (sigma, x) with its attached groups."""

    sigma: CommutingTuple
    orbit_rep: int
    orbit: np.ndarray
    centralizer: FiniteGroup
    centralizer_indices: np.ndarray
    stabilizer: FiniteGroup
    stabilizer_indices: np.ndarray
    transversal: dict = field(repr=False)

    @property
    def orbit_size(self):
        return len(self.orbit)


@dataclass
class LoopSkeleton:
    group: FiniteGroup
    gset: GSet
    n: int
    components: list

    def __len__(self):
        return len(self.components)


def lambda_skeleton(G, X, n):
    """All components of the n-fold loop groupoid skeleton of X//G.

    Components are ordered by (position of sigma in the canonical tuple
    list, least orbit point); the ordering is part of the serialization
    contract.
    """
    comps = []
    for sigma in commuting_tuples(G, n):
        fixed = X.fixed(sigma.entries)
        if len(fixed) == 0:
            continue
        cent = G.centralizer(sigma.entries)
        cidx = G.locate(cent.elements)
        for orbit in subgroup_orbits(X.action, cidx, fixed):
            rep = int(orbit[0])
            transversal = _orbit_transversal(G, X, cidx, rep)
            stab_rows = [c for c in cidx if X.action[c, rep] == rep]
            stab = G.subgroup(stab_rows)
            sidx = G.locate(stab.elements)
            comps.append(SkeletonComponent(
                sigma=sigma,
                orbit_rep=rep,
                orbit=orbit,
                centralizer=cent,
                centralizer_indices=cidx,
                stabilizer=stab,
                stabilizer_indices=sidx,
                transversal=transversal,
            ))
    return LoopSkeleton(group=G, gset=X, n=n, components=comps)


def _orbit_transversal(G, X, cidx, rep):
    """For each point p of the orbit of rep, one centralizer element u with
    rep.u = p (ambient index). BFS from the representative."""
    out = {rep: 0}
    frontier = [rep]
    m = G.mult
    while frontier:
        new = []
        for p in frontier:
            up = out[p]
            for c in cidx:
                q = int(X.action[c, p])
                if q not in out:
                    out[q] = int(m[up, c])
                    new.append(q)
        frontier = new
    return out


def component_counts(skel):
    """Number of components per tuple class, keyed by the tuple entries."""
    out = {}
    for comp in skel.components:
        out[comp.sigma.entries] = out.get(comp.sigma.entries, 0) + 1
    return out


# -- iterated counting --------------------------------------------------------


def _orbit_min(action_rows, start):
    """Least point of the orbit of `start` under the given action rows."""
    seen = {int(start)}
    frontier = [int(start)]
    best = int(start)
    while frontier:
        new = []
        for p in frontier:
            for row in action_rows:
                q = int(row[p])
                if q not in seen:
                    seen.add(q)
                    new.append(q)
                    if q < best:
                        best = q
        frontier = new
    return best


def _iterated_components(G, amb_indices, action, points, n):
    """Nested components as (ambient entry tuple, witness point) pairs.

    G is the current subgroup given by its ambient indices; action is the
    ambient action table, points the current invariant point set.
    """
    if n == 0:
        reps = []
        rows = [action[a] for a in amb_indices]
        done = set()
        for p in points:
            mn = _orbit_min(rows, p)
            if mn not in done:
                done.add(mn)
                reps.append(((), mn))
        return reps
    out = []
    for cls in G.conjugacy_classes:
        rep_local = int(cls[0])
        rep_amb = int(amb_indices[rep_local])
        fixed = [p for p in points if action[rep_amb, p] == p]
        if not fixed:
            continue
        cent_local = np.where(G.comm[rep_local])[0]
        cent = G.subgroup(cent_local)
        cent_amb = amb_indices[cent_local]
        inner = _iterated_components(
            cent, cent_amb, action, np.array(fixed, np.int32), n - 1)
        for entries, witness in inner:
            out.append(((rep_amb,) + entries, witness))
    return out


def iterated_component_count(G, X, n):
    """Component count via one-entry-at-a-time iteration plus fusion.

    The nested recursion produces one component per (class rep of sigma_1,
    nested component of the centralizer theory on the fixed set); fusion
    maps each nested tuple to its canonical simultaneous-conjugacy form
    and transports the witness point, then counts distinct pairs.
    """
    amb = np.arange(G.size, dtype=np.int32)
    nested = _iterated_components(G, amb, X.action,
                                  np.arange(X.npoints, dtype=np.int32), n)
    inv = G.inv
    seen = set()
    for entries, witness in nested:
        canon, g = canonical_tuple(G, entries)
        moved = int(X.action[inv[g], witness])
        cidx = np.where(_centralizer_mask(G, canon.entries))[0]
        rows = [X.action[c] for c in cidx]
        key = (canon.entries, _orbit_min(rows, moved))
        seen.add(key)
    return len(seen)


def _centralizer_mask(G, entries):
    mask = np.ones(G.size, dtype=bool)
    for e in entries:
        mask &= G.comm[int(e)]
    return mask
