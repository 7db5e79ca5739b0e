from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from affsemi.cone import cone_contains, cone_of, positive_functional, relint_contains
from affsemi.errors import InputError
from affsemi.linalg import from_columns
from affsemi.lp import feasible_ge, nonneg_solution

from conftest import FIVE, GLUE_2, TWELVE
from oracles import slope_rays
from strategies import semigroups_2d, semigroups_3d


def lp_in_cone(gens, v):
    return nonneg_solution(from_columns(gens, len(v)), list(v)) is not None


def test_examples():
    assert set(cone_of(FIVE).extreme_rays) == {(1, 0), (0, 1)}
    assert set(cone_of(TWELVE).extreme_rays) == {(2, 1), (6, 1)}
    C = cone_of([(1, 1)])
    assert C.extreme_rays == ((1, 1),) and C.span_dim == 1
    C2 = cone_of(GLUE_2)
    assert C2.span_dim == 2 and C2.equations in (((1, -1, 0),), ((-1, 1, 0),))


def test_containment_examples():
    Q = cone_of(FIVE)
    T = cone_of([(2, 1), (6, 1)])
    assert cone_contains(Q, (7, 2)) and cone_contains(Q, (0, 0))
    assert not cone_contains(T, (1, 1))
    assert relint_contains(Q, (1, 1)) and not relint_contains(Q, (3, 0))
    assert relint_contains(T, (4, 1))
    assert cone_contains(T, (Fraction(7, 2), Fraction(1, 1)))


def test_zero_cone_and_errors():
    Z = cone_of([], 2)
    assert Z.span_dim == 0 and cone_contains(Z, (0, 0)) and not cone_contains(Z, (1, 0))
    with pytest.raises(InputError):
        cone_of([(0, 0)])
    with pytest.raises(InputError):
        cone_of([(1, -1)])


def test_positive_functional():
    C = cone_of([(3, 0), (0, 1)])
    assert positive_functional(C) == (1, 1)
    with pytest.raises(InputError):
        positive_functional(C, (1, 0))


@given(semigroups_2d())
def test_rays_match_slope_oracle(gens):
    assert set(cone_of(gens).extreme_rays) == slope_rays(gens)


@given(st.one_of(semigroups_2d(), semigroups_3d()))
def test_generators_and_rays_inside(gens):
    C = cone_of(gens)
    assert all(cone_contains(C, g) for g in gens)
    assert all(cone_contains(C, r) for r in C.extreme_rays)
    if len(C.facets) >= 2:
        assert not any(relint_contains(C, r) for r in C.extreme_rays)


@given(st.one_of(semigroups_2d(), semigroups_3d()), st.randoms(use_true_random=False))
def test_facets_agree_with_lp(gens, rnd):
    C = cone_of(gens)
    d = len(gens[0])
    for _ in range(15):
        v = tuple(rnd.randint(-2, 6) for _ in range(d))
        inside = cone_contains(C, v)
        assert inside == lp_in_cone(gens, v)
        assert inside == lp_in_cone(list(C.extreme_rays), v)


@given(semigroups_3d(), st.randoms(use_true_random=False))
def test_order_insensitive(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    a, b = cone_of(gens), cone_of(shuffled)
    assert set(a.extreme_rays) == set(b.extreme_rays)
    assert set(a.facets) == set(b.facets)


def test_feasible_ge():
    sol = feasible_ge([[1, -1], [0, 1]], [1, 2], 2)
    assert sol is not None and sol[0] - sol[1] >= 1 and sol[1] >= 2
    assert feasible_ge([[-1]], [1], 1) is None
