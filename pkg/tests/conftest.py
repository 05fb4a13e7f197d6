import pytest

from quasik._backend import backend_name
from quasik.chartable import character_table
from quasik.corpus import corpus_group
from quasik.groups import commuting_tuples


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every kernel once up front so jit compilation time never
    lands inside a timed assertion."""
    G = corpus_group("S3")
    character_table(G)
    commuting_tuples(G, 1)
    return backend_name()
