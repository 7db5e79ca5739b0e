"""Brute-force reference implementations used only by the tests."""

from fractions import Fraction
from functools import reduce
from math import gcd


def sums_upto(gens, length):
    """Every sum of at most ``length`` generators (exhaustive coefficient enumeration)."""
    d = len(gens[0])
    level = {(0,) * d}
    out = set(level)
    for _ in range(length):
        level = {tuple(a + b for a, b in zip(x, g)) for x in level for g in gens}
        out |= level
    return out


def slope_rays(gens):
    """Extreme rays of a 2-d cone: the generators of smallest and largest slope."""
    def prim(v):
        g = reduce(gcd, v)
        return tuple(x // g for x in v)

    def slope(v):
        return Fraction(v[1], v[0]) if v[0] else None

    vert = [g for g in gens if g[0] == 0]
    finite = sorted((g for g in gens if g[0]), key=slope)
    rays = set()
    if finite:
        rays.add(prim(finite[0]))
    if vert:
        rays.add((0, 1))
    elif finite:
        rays.add(prim(finite[-1]))
    return rays


def numerical_sieve(gens):
    """Members, gaps, Frobenius number and PF numbers of a numerical semigroup."""
    assert reduce(gcd, gens) == 1
    bound = min(gens) * max(gens) + max(gens)
    member = [False] * (bound + 1)
    member[0] = True
    for x in range(1, bound + 1):
        member[x] = any(x >= g and member[x - g] for g in gens)
    gap_list = [x for x in range(bound + 1) if not member[x]]
    frob = max(gap_list) if gap_list else -1
    m = min(gens)
    # Apéry set: least element in each residue class mod m
    ap = [next(x for x in range(r, bound + 1, m) if member[x]) for r in range(m)]
    maximal = [w for w in ap if not any(v != w and v - w >= 0 and member[v - w] for v in ap)]
    pf = sorted(w - m for w in maximal if w != 0) if gap_list else []
    return member, gap_list, frob, pf
