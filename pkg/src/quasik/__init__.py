"""Exact quasi-theory rings for finite permutation groups.

The main entry point is qk_compute(G, X, n), which returns a QTheoryRing:
a free module over Z[q_1^{+-1}, ..., q_n^{+-1}] with componentwise basis
indexed by irreducible characters of point stabilizers, together with its
exact ring structure. Structure maps (restriction along homomorphisms,
change of group, Kunneth factorization) are built as explicit matrices
over the coefficient ring and can be checked for bijectivity exactly.
"""

from ._backend import backend_name
from .chartable import CharacterTable, character_table
from .corpus import CORPUS_NAMES, corpus, corpus_group, standard_gsets
from .cyclotomic import Cyclotomic
from .groups import (ClosureCapExceeded, CommutingTuple, FiniteGroup, GroupHom,
                     GSet, Perm, canonical_tuple, commuting_tuples,
                     count_commuting_tuples, direct_product, induced_gset)
from .jsonio import InputError
from .laurent import LambdaModule, LaurentPoly, lambda_basis, laurent_det
from .loopspace import iterated_component_count, lambda_skeleton
from .qtheory import (QClass, QTheoryMap, QTheoryRing, change_of_group_map,
                      clear_ring_cache, compose_maps, free_action_report,
                      kunneth_map, qk_compute, rank_identity_holds,
                      restriction_map, tate_export, theory_map,
                      verify_free_action, verify_trivial_action_split)
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "CORPUS_NAMES", "CharacterTable", "ClosureCapExceeded", "CommutingTuple",
    "Cyclotomic", "FiniteGroup", "GSet", "GroupHom", "InputError",
    "LambdaModule", "LaurentPoly", "Perm", "QClass", "QTheoryMap",
    "QTheoryRing", "SUITES", "backend_name", "canonical_tuple",
    "change_of_group_map", "character_table", "clear_ring_cache",
    "commuting_tuples", "compose_maps", "corpus", "corpus_group",
    "count_commuting_tuples", "direct_product", "free_action_report",
    "induced_gset", "iterated_component_count", "kunneth_map", "lambda_basis",
    "lambda_skeleton", "laurent_det", "qk_compute", "rank_identity_holds",
    "restriction_map", "run_suite", "standard_gsets", "tate_export",
    "theory_map", "verify_free_action", "verify_trivial_action_split",
]
