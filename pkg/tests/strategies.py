"""Hypothesis strategies for poset-valued properties."""

from __future__ import annotations

from hypothesis import strategies as st

from intervalcert import Poset, random_poset


@st.composite
def posets(draw, min_n: int = 0, max_n: int = 10) -> Poset:
    """Seeded random posets (intersections of 2-4 random linear orders)."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**31 - 1))
    orders = draw(st.integers(2, 4))
    return random_poset(n, seed, orders)


small_k = st.integers(1, 4)
