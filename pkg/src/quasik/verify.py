"""Machine verification suites for the structural statements.

Each suite checks one family of claims across a corpus of groups and
returns a SuiteResult; the CLI and the acceptance tests are thin wrappers
around these functions. Oracles are deliberately low-tech: brute-force
class counting, Burnside tuple counting and literal identity checks on
randomized classes.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .chartable import character_table
from .corpus import CORPUS_NAMES, corpus_group, standard_gsets
from .cyclotomic import Cyclotomic
from .groups import GSet, GroupHom, direct_product
from .laurent import LaurentPoly
from .loopspace import iterated_component_count, lambda_skeleton
from .qtheory import (change_of_group_map, compose_maps, free_action_report,
                      kunneth_map, qk_compute, rank_identity_holds,
                      restriction_map, verify_trivial_action_split)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, message):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def summary(self):
        status = "pass" if self.passed else "FAIL"
        line = "%-16s %s  (%d checks" % (self.name, status, self.checks)
        if self.failures:
            line += ", %d failed" % len(self.failures)
        return line + ")"


def _groups(groups):
    if groups is None:
        return [(name, corpus_group(name)) for name in CORPUS_NAMES]
    return list(groups.items())


def _brute_class_count(S):
    """Conjugacy class count from the raw multiplication table only."""
    m = S.mult
    inv = S.inv
    seen = set()
    count = 0
    for x in range(S.size):
        if x in seen:
            continue
        count += 1
        for g in range(S.size):
            seen.add(int(m[m[g, x], inv[g]]))
    return count


# -- suites -------------------------------------------------------------------


def suite_freeness(groups=None, n_max=2):
    """Every component module is free with basis matching Irr(stabilizer),
    with q-degrees k/l normalized into [0,1) and l the entry order."""
    res = SuiteResult("freeness")
    for name, G in _groups(groups):
        for xname, X in standard_gsets(G).items():
            for n in range(1, n_max + 1):
                ring = qk_compute(G, X, n)
                for ci, comp in enumerate(ring.components):
                    stab = comp.skeleton.stabilizer
                    res.check(
                        comp.rank == _brute_class_count(stab),
                        "%s %s n=%d comp %d: rank %d != class count"
                        % (name, xname, n, ci, comp.rank))
                    for b in comp.module.basis:
                        ok = all(0 <= k < l for k, l in
                                 zip(b.q_num, b.orders))
                        ok = ok and b.orders == tuple(
                            int(stab.element_orders[s])
                            for s in comp.module.sigma_local)
                        res.check(ok, "%s %s n=%d comp %d: bad q-degree %r"
                                  % (name, xname, n, ci, b))
                res.check(
                    ring.total_rank == sum(c.rank for c in ring.components),
                    "%s %s n=%d: rank bookkeeping" % (name, xname, n))
    return res


def suite_rank(groups=None, n_max=2):
    """rank QK_{n,G}(pt) = number of commuting (n+1)-tuple classes."""
    res = SuiteResult("rank")
    for name, G in _groups(groups):
        for n in range(1, n_max + 1):
            res.check(rank_identity_holds(G, n),
                      "%s n=%d: rank identity fails" % (name, n))
    return res


def _corpus_pairs(groups, max_product):
    items = _groups(groups)
    out = []
    for i, (na, Ga) in enumerate(items):
        for nb, Gb in items[i:]:
            if Ga.size * Gb.size <= max_product:
                out.append((na, Ga, nb, Gb))
    return out


def suite_kunneth(groups=None, n_max=2, max_product=64, randomized=100,
                  seed=20260816, cosets_n1=True):
    """Kunneth factorization: bijective on every corpus pair, balanced and
    bilinear on randomized classes."""
    res = SuiteResult("kunneth")
    rng = random.Random(seed)
    for na, Ga, nb, Gb in _corpus_pairs(groups, max_product):
        configs = [("pt", GSet.point(Ga), GSet.point(Gb), range(1, n_max + 1))]
        if cosets_n1:
            configs.append(("cosets",
                            standard_gsets(Ga)["cosets"],
                            standard_gsets(Gb)["cosets"], (1,)))
        for xname, XA, XB, ns in configs:
            for n in ns:
                ra = qk_compute(Ga, XA, n)
                rb = qk_compute(Gb, XB, n)
                km = kunneth_map(ra, rb)
                res.check(km.is_bijective(),
                          "%s x %s (%s) n=%d: not bijective"
                          % (na, nb, xname, n))
                res.check(
                    km.target.total_rank == ra.total_rank * rb.total_rank,
                    "%s x %s (%s) n=%d: rank %d != %d*%d"
                    % (na, nb, xname, n, km.target.total_rank,
                       ra.total_rank, rb.total_rank))
                for _ in range(randomized):
                    x = ra.random_class(rng)
                    y = rb.random_class(rng)
                    f = LaurentPoly.monomial(
                        tuple(rng.randint(-2, 2) for _ in range(n)),
                        rng.choice([-2, -1, 1, 2, 3]))
                    left = km.apply(ra.pi_star(f) * x, y)
                    right = km.apply(x, rb.pi_star(f) * y)
                    outer = km.target.pi_star(f) * km.apply(x, y)
                    res.check(left == right == outer,
                              "%s x %s (%s) n=%d: balancedness fails"
                              % (na, nb, xname, n))
    return res


def suite_change_of_group(groups=None, n_max=2, max_order=24,
                          up_to_conjugacy=False):
    """rho: QK_{n,G}(X x_H G) -> QK_{n,H}(X) is an isomorphism for every
    subgroup H of every corpus group and stock H-sets X."""
    res = SuiteResult("change-of-group")
    for name, G in _groups(groups):
        if G.size > max_order:
            continue
        for H in G.all_subgroups(up_to_conjugacy=up_to_conjugacy):
            for xname, X in standard_gsets(H).items():
                for n in range(1, n_max + 1):
                    rho, _ = change_of_group_map(G, H, X, n)
                    res.check(
                        rho.is_bijective(),
                        "%s >= |H|=%d, X=%s, n=%d: not bijective"
                        % (name, H.size, xname, n))
                    res.check(
                        rho.source.total_rank == rho.target.total_rank,
                        "%s >= |H|=%d, X=%s, n=%d: ranks %d != %d"
                        % (name, H.size, xname, n,
                           rho.source.total_rank, rho.target.total_rank))
    return res


def _sub_by_images(G, rows):
    return G.subgroup(G.locate(rows))


def composable_hom_pairs():
    """Ten fixed composable pairs (phi: G -> H, psi: H -> K) over the corpus."""
    S4 = corpus_group("S4")
    S3 = corpus_group("S3")
    D4 = corpus_group("D4")
    Z2 = corpus_group("Z2")
    Z3 = corpus_group("Z3")
    Z4 = corpus_group("Z4")
    Z6 = corpus_group("Z6")
    V4 = corpus_group("Z2xZ2")
    Q8 = corpus_group("Q8")
    A4 = corpus_group("A4")
    TR = corpus_group("trivial")

    def hom(src, tgt, images):
        return GroupHom.from_gen_images(src, tgt, images)

    s3_in_s4 = hom(S3, S4, [[1, 0, 2, 3], [1, 2, 0, 3]])
    s4_to_s3 = hom(S4, S3, [[0, 2, 1], [2, 1, 0]])
    d4_in_s4 = hom(D4, S4, [[1, 2, 3, 0], [0, 3, 2, 1]])
    pairs = [
        ("Z2>S3>S4", hom(Z2, S3, [[1, 0, 2]]), s3_in_s4),
        ("Z3>S3>S4", hom(Z3, S3, [[1, 2, 0]]), s3_in_s4),
        ("Z2>Z4>D4", hom(Z2, Z4, [[2, 3, 0, 1]]), hom(Z4, D4, [[1, 2, 3, 0]])),
        ("V4>D4>S4", hom(V4, D4, [[2, 3, 0, 1], [0, 3, 2, 1]]), d4_in_s4),
        ("Z4>D4>S4", hom(Z4, D4, [[1, 2, 3, 0]]), d4_in_s4),
        ("D4>S4>S3", d4_in_s4, s4_to_s3),
        ("A4>S4>S3", hom(A4, S4, [[1, 2, 0, 3], [1, 0, 3, 2]]), s4_to_s3),
        ("Z6>S3>S4", hom(Z6, S3, [[1, 2, 0]]), s3_in_s4),
        ("Q8>V4>D4", hom(Q8, V4, [[1, 0, 3, 2], [0, 1, 3, 2]]),
         hom(V4, D4, [[2, 3, 0, 1], [0, 3, 2, 1]])),
        ("1>Q8>Z2", hom(TR, Q8, []), hom(Q8, Z2, [[0, 1], [1, 0]])),
    ]
    return pairs


def suite_restriction(n_basis=(1, 2), randomized_total=100, seed=20260817):
    """Functoriality (psi phi)^* = phi^* psi^* on all basis classes and the
    ring homomorphism law on randomized pairs."""
    res = SuiteResult("restriction")
    rng = random.Random(seed)
    pairs = composable_hom_pairs()
    per_hom = max(1, randomized_total // len(pairs))
    for label, phi, psi in pairs:
        K = psi.target
        X = standard_gsets(K)["cosets"]
        for n in n_basis:
            r_psi = restriction_map(psi, X, n)
            r_phi = restriction_map(phi, X.restrict(psi), n)
            direct = restriction_map(phi.then(psi), X, n)
            composite = compose_maps(r_psi, r_phi)
            res.check(direct.equal_on_basis(composite),
                      "%s n=%d: functoriality fails on a basis class"
                      % (label, n))
        n = 1
        direct = restriction_map(phi.then(psi), X, n)
        src = direct.source
        for _ in range(per_hom):
            x = src.random_class(rng)
            y = src.random_class(rng)
            res.check(
                direct.apply(x * y) == direct.apply(x) * direct.apply(y),
                "%s: restriction is not a ring map on a random pair" % label)
    return res


def suite_free_action(groups=None, n_max=2):
    """Free actions: the theory collapses to the quotient point count."""
    res = SuiteResult("free-action")
    for name, G in _groups(groups):
        X = GSet.regular(G)
        for n in range(1, n_max + 1):
            ok, details = free_action_report(G, X, n)
            res.check(ok, "%s regular n=%d: %s"
                      % (name, n, "; ".join(details) or "failed"))
        if G.size >= 2:
            X2 = GSet(G, 2 * G.size,
                      _double_regular_action(G))
            for n in range(1, n_max + 1):
                ok, details = free_action_report(G, X2, n)
                res.check(ok, "%s 2xregular n=%d: %s"
                          % (name, n, "; ".join(details) or "failed"))
    return res


def _double_regular_action(G):
    act = np.empty((G.size, 2 * G.size), dtype=np.int32)
    act[:, :G.size] = G.mult.T
    act[:, G.size:] = G.mult.T + G.size
    return act


TRIVIAL_ACTION_TRIPLES = (
    ("Z2", "Z2", "cosets"), ("Z2", "Z3", "regular"), ("Z3", "Z2", "cosets"),
    ("S3", "Z2", "cosets"), ("S3", "Z3", "pt"), ("Z4", "Z2", "regular"),
    ("D4", "Z2", "cosets"), ("Z2xZ2", "Z3", "cosets"), ("Q8", "Z2", "pt"),
    ("A4", "Z2", "cosets"),
)


def suite_trivial_action(triples=TRIVIAL_ACTION_TRIPLES, n_max=2):
    """A trivially-acting factor splits off as a tensor factor."""
    res = SuiteResult("trivial-action")
    for gname, hname, xname in triples:
        G = corpus_group(gname)
        H = corpus_group(hname)
        X = standard_gsets(G)[xname]
        GH = direct_product(G, H)
        ext = X.product(GSet.point(H), GH)
        # H must act trivially on the extended set
        res.check(ext.restrict(_embed_second(GH, H)).is_trivial(),
                  "%s x %s (%s): extension is not H-trivial"
                  % (gname, hname, xname))
        for n in range(1, n_max + 1):
            res.check(verify_trivial_action_split(G, H, ext, n),
                      "%s x %s (%s) n=%d: split fails"
                      % (gname, hname, xname, n))
    return res


def _embed_second(GH, H):
    images = [GH.index(tuple(range(GH.factors[0].degree))
                       + tuple(x + GH.factors[0].degree for x in H.elements[g]))
              for g in H.generator_indices]
    return GroupHom.from_gen_images(H, GH, images)


def suite_lambda_iter(groups=None, n_max=2):
    """Iterated one-entry counting agrees with the direct skeleton."""
    res = SuiteResult("lambda-iter")
    for name, G in _groups(groups):
        for xname, X in standard_gsets(G).items():
            for n in range(1, n_max + 1):
                direct = len(lambda_skeleton(G, X, n))
                iterated = iterated_component_count(G, X, n)
                res.check(direct == iterated,
                          "%s %s n=%d: direct %d != iterated %d"
                          % (name, xname, n, direct, iterated))
    return res


RING_AXIOM_SAMPLES = (
    ("S3", "cosets", 1), ("D4", "pt", 2), ("Z6", "regular", 1),
    ("Q8", "pt", 1), ("Z4", "cosets", 2), ("A4", "pt", 1),
)


def suite_ring_axioms(samples=RING_AXIOM_SAMPLES, rounds=25, seed=20260818):
    """Commutative unital ring laws on randomized classes."""
    res = SuiteResult("ring-axioms")
    rng = random.Random(seed)
    for gname, xname, n in samples:
        G = corpus_group(gname)
        X = standard_gsets(G)[xname]
        ring = qk_compute(G, X, n)
        one = ring.unit()
        for _ in range(rounds):
            x = ring.random_class(rng)
            y = ring.random_class(rng)
            z = ring.random_class(rng)
            res.check((x * y) * z == x * (y * z),
                      "%s %s n=%d: associativity" % (gname, xname, n))
            res.check(x * y == y * x,
                      "%s %s n=%d: commutativity" % (gname, xname, n))
            res.check(x * (y + z) == x * y + x * z,
                      "%s %s n=%d: distributivity" % (gname, xname, n))
            res.check(one * x == x,
                      "%s %s n=%d: unit" % (gname, xname, n))
        for _ in range(rounds):
            f = LaurentPoly.monomial(tuple(rng.randint(-2, 2)
                                           for _ in range(n)),
                                     rng.choice([-2, -1, 1, 2]))
            g = LaurentPoly.monomial(tuple(rng.randint(-2, 2)
                                           for _ in range(n)),
                                     rng.choice([-2, -1, 1, 2]))
            res.check(ring.pi_star(f) * ring.pi_star(g) == ring.pi_star(f * g),
                      "%s %s n=%d: pi_star multiplicativity"
                      % (gname, xname, n))
        for i in range(n):
            qi = ring.q(i)
            inv = ring.pi_star(LaurentPoly.monomial(
                tuple(-1 if k == i else 0 for k in range(n))))
            res.check(qi * inv == one, "%s %s n=%d: q_%d not invertible"
                      % (gname, xname, n, i + 1))
    return res


def suite_characters(groups=None):
    """Exact character substrate: orthogonality, degree identity and
    central-scalar additivity mod 1."""
    res = SuiteResult("characters")
    for name, G in _groups(groups):
        table = character_table(G)
        r = table.nclasses
        res.check(len(table.chars) == r,
                  "%s: %d characters for %d classes"
                  % (name, len(table.chars), r))
        res.check(sum(ch.degree ** 2 for ch in table.chars) == G.size,
                  "%s: degree squares do not sum to |G|" % name)
        for i in range(r):
            for j in range(i, r):
                ip = table.inner(table.chars[i].values, table.chars[j].values)
                want = 1 if i == j else 0
                res.check(ip == Cyclotomic.from_int(want),
                          "%s: <chi%d,chi%d> = %r" % (name, i, j, ip))
        center = G.center()
        orders = G.element_orders
        for z in center:
            for w in center:
                zw = int(G.mult[int(z), int(w)])
                for t in range(len(table.chars)):
                    fz = Fraction(table.central_scalar(t, int(z)),
                                  int(orders[int(z)]))
                    fw = Fraction(table.central_scalar(t, int(w)),
                                  int(orders[int(w)]))
                    fzw = Fraction(table.central_scalar(t, zw),
                                   int(orders[zw]))
                    res.check((fz + fw - fzw).denominator == 1,
                              "%s: central scalars not additive mod 1 "
                              "(chi%d)" % (name, t))
    return res


SUITES = {
    "freeness": suite_freeness,
    "rank": suite_rank,
    "kunneth": suite_kunneth,
    "change-of-group": suite_change_of_group,
    "restriction": suite_restriction,
    "free-action": suite_free_action,
    "trivial-action": suite_trivial_action,
    "lambda-iter": suite_lambda_iter,
    "ring-axioms": suite_ring_axioms,
    "characters": suite_characters,
}


def run_suite(name, groups=None, fast=False):
    """Run one suite (or 'all'); returns a list of SuiteResults."""
    if name == "all":
        names = list(SUITES)
    else:
        if name not in SUITES:
            raise KeyError("unknown suite %r; have %s and 'all'"
                           % (name, ", ".join(sorted(SUITES))))
        names = [name]
    out = []
    for nm in names:
        fn = SUITES[nm]
        kwargs = {}
        if nm in ("freeness", "rank", "kunneth", "change-of-group",
                  "free-action", "lambda-iter", "characters"):
            kwargs["groups"] = groups
        if fast:
            if nm == "kunneth":
                kwargs.update(max_product=24, randomized=10)
            elif nm == "change-of-group":
                kwargs.update(max_order=12, n_max=1, up_to_conjugacy=True)
            elif nm == "restriction":
                kwargs.update(n_basis=(1,), randomized_total=20)
            elif nm in ("freeness", "lambda-iter", "free-action"):
                kwargs.update(n_max=1)
            elif nm == "ring-axioms":
                kwargs.update(rounds=5)
            elif nm == "trivial-action":
                kwargs.update(n_max=1)
        out.append(fn(**kwargs))
    return out
