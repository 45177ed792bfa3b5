import random

from hypothesis import settings, strategies as st

from treepairs import remy_sample

settings.register_profile("pkg", deadline=None)
settings.load_profile("pkg")


@st.composite
def tree_words(draw, min_size=1, max_size=12):
    """Uniform random tree words, shrinking toward small sizes and seeds."""
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return remy_sample(n, random.Random(seed))


@st.composite
def tree_pairs(draw, min_size=2, max_size=9):
    """Pairs of independent uniform trees of one size."""
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return remy_sample(n, rng), remy_sample(n, rng)
