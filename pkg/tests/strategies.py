"""Random small monomial ideals for property tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from bettisplit.monomials import minimalize


@st.composite
def ideals(draw, max_n: int = 4, max_exp: int = 2, max_gens: int = 5):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=1, max_size=max_gens))
    return minimalize(gens, n)


def random_squarefree_ideal(rng: random.Random, n: int, degree: int, count: int):
    from itertools import combinations

    pool = list(combinations(range(n), degree))
    picks = rng.sample(pool, min(count, len(pool)))
    return minimalize([tuple(1 if k in s else 0 for k in range(n)) for s in picks], n)
