"""Hypothesis strategies for small posets."""

import random

from hypothesis import strategies as st

from src.poset.constructions import random_poset


def posets(min_points: int = 0, max_points: int = 5):
    """Random labeled posets, built from a seed so shrinking stays meaningful."""
    return st.builds(
        lambda k, seed, density: random_poset(k, random.Random(seed), density),
        st.integers(min_points, max_points),
        st.integers(0, 2 ** 32 - 1),
        st.sampled_from([0.0, 0.2, 0.4, 0.6, 0.9]),
    )
