"""Hypothesis strategies for small affine semigroups."""

from math import gcd

from hypothesis import strategies as st

small = st.integers(min_value=0, max_value=6)


@st.composite
def c_semigroups_2d(draw):
    """Generators in N^2 whose semigroup is a C-semigroup with cone N^2.

    Two coprime multipliers on each axis make both axes cofinite and G(S) = Z^2.
    An interior seed (1, k) and (k, 1) covers the rest: a point (x, y) with y
    large is x·(1, k) plus an element of the cofinite y-axis part, and
    symmetrically.
    """
    def coprime_pair():
        p = draw(st.integers(2, 5))
        q = draw(st.integers(p + 1, 9).filter(lambda q: gcd(p, q) == 1))
        return p, q
    a, b = coprime_pair()
    c, e = coprime_pair()
    gens = {(a, 0), (b, 0), (0, c), (0, e)}
    k = draw(st.integers(1, 3))
    gens.update({(1, k), (k, 1)})
    extra = draw(st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6)), max_size=3))
    gens.update(extra)
    return sorted(gens)


@st.composite
def semigroups_2d(draw, max_gens=4, max_coord=5):
    """Arbitrary small generator sets in N^2 (no zero, no duplicates)."""
    pts = st.tuples(st.integers(0, max_coord), st.integers(0, max_coord)).filter(any)
    return sorted(set(draw(st.lists(pts, min_size=1, max_size=max_gens))))


@st.composite
def semigroups_3d(draw, max_gens=4, max_coord=3):
    pts = st.tuples(*(st.integers(0, max_coord) for _ in range(3))).filter(any)
    return sorted(set(draw(st.lists(pts, min_size=1, max_size=max_gens))))


@st.composite
def numerical(draw, max_gen=25):
    """Generators of a numerical semigroup (gcd 1), multiplicity at least 2."""
    gens = draw(st.lists(st.integers(2, max_gen), min_size=2, max_size=5, unique=True)
                .filter(lambda g: gcd(*g) == 1))
    return sorted(gens)
