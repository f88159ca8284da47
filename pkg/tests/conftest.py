import itertools

import pytest
from hypothesis import strategies as st

from unipolar.graph import Graph
from unipolar.oracle import gen_named


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def named():
    return gen_named
