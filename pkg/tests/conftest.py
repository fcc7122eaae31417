from __future__ import annotations

import os
import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ccrit.graph import Multigraph

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=15, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 8) -> Multigraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Multigraph(range(n), chosen)


@st.composite
def multigraphs(draw, min_n: int = 1, max_n: int = 7, max_mult: int = 3) -> Multigraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Multigraph(range(n), [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    mults = draw(st.lists(st.integers(1, max_mult), min_size=len(chosen), max_size=len(chosen)))
    return Multigraph(range(n), [(u, v, m) for (u, v), m in zip(chosen, mults)])


def random_graph(rng: random.Random, max_n: int, max_m: int | None = None) -> Multigraph:
    """A seeded random simple graph with at most max_n vertices and max_m edges."""
    n = rng.randint(1, max_n)
    pairs = list(combinations(range(n), 2))
    top = len(pairs) if max_m is None else min(len(pairs), max_m)
    k = rng.randint(0, top)
    return Multigraph(range(n), rng.sample(pairs, k))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
