from itertools import combinations

from hypothesis import strategies as st

from polyface.poset import Poset


@st.composite
def posets(draw, min_n=0, max_n=6):
    """Arbitrary posets: a random upper-triangular relation, closed, then relabeled."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    rel = [(perm[a], perm[b]) for (a, b), k in zip(pairs, keep) if k]
    return Poset.from_relation(n, rel)


@st.composite
def poset_and_subset(draw, min_n=1, max_n=6):
    P = draw(posets(min_n, max_n))
    S = draw(st.integers(0, (1 << P.n) - 1))
    return P, S
