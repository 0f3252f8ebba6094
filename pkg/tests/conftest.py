from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symbreak.graphs import Graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

REPO_ROOT = Path(__file__).resolve().parent.parent
GRAPHS7_FILE = REPO_ROOT / "data" / "graphs7.g6"


@pytest.fixture(scope="session")
def graphs7_path() -> Path:
    assert GRAPHS7_FILE.exists(), "run scripts/generate_corpus.py first"
    return GRAPHS7_FILE


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1))
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


@st.composite
def perm_lists(draw, count=1, min_n=1, max_n=8):
    """A list of `count` permutations sharing one degree."""
    from symbreak.perms import Perm

    n = draw(st.integers(min_n, max_n))
    return [Perm(tuple(draw(st.permutations(range(n))))) for _ in range(count)]
