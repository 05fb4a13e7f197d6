"""The built-in test corpus: small permutation groups and standard G-sets.

Order matters for deterministic reports; groups are listed by increasing
order. The "cosets" G-set of a group is the right coset space of the
cyclic subgroup generated by its first non-identity element, which keeps
the point a faithful mid-size action between the point and the regular
set.
"""

from functools import lru_cache

from .groups import FiniteGroup, GSet

CORPUS_NAMES = (
    "trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6",
    "D4", "Q8", "A4", "D6", "S4",
)

_DEFS = {
    "trivial": (1, []),
    "Z2": (2, [[1, 0]]),
    "Z3": (3, [[1, 2, 0]]),
    "Z4": (4, [[1, 2, 3, 0]]),
    "Z2xZ2": (4, [[1, 0, 2, 3], [0, 1, 3, 2]]),
    "S3": (3, [[1, 0, 2], [1, 2, 0]]),
    "Z6": (5, [[1, 0, 3, 4, 2]]),
    "D4": (4, [[1, 2, 3, 0], [0, 3, 2, 1]]),
    "Q8": (8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]),
    "A4": (4, [[1, 2, 0, 3], [1, 0, 3, 2]]),
    "D6": (6, [[1, 2, 3, 4, 5, 0], [0, 5, 4, 3, 2, 1]]),
    "S4": (4, [[1, 0, 2, 3], [1, 2, 3, 0]]),
}

_EXPECTED_ORDERS = {
    "trivial": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z2xZ2": 4, "S3": 6,
    "Z6": 6, "D4": 8, "Q8": 8, "A4": 12, "D6": 12, "S4": 24,
}


@lru_cache(maxsize=None)
def corpus_group(name):
    if name not in _DEFS:
        raise KeyError("unknown corpus group %r (have: %s)"
                       % (name, ", ".join(CORPUS_NAMES)))
    degree, gens = _DEFS[name]
    G = FiniteGroup.from_generators(degree, gens)
    if G.size != _EXPECTED_ORDERS[name]:
        raise AssertionError("corpus group %s has order %d, expected %d"
                             % (name, G.size, _EXPECTED_ORDERS[name]))
    return G


def corpus():
    return {name: corpus_group(name) for name in CORPUS_NAMES}


def cosets_gset(G):
    """Right cosets of the cyclic subgroup of the first non-identity element."""
    if G.size == 1:
        return GSet.point(G)
    gen = 1
    members = [0]
    acc = gen
    while acc != 0:
        members.append(int(acc))
        acc = int(G.mult[acc, gen])
    H = G.subgroup(members)
    return GSet.cosets(G, H)


def standard_gsets(G):
    """The three stock G-sets used throughout the verification suites."""
    return {
        "pt": GSet.point(G),
        "cosets": cosets_gset(G),
        "regular": GSet.regular(G),
    }
