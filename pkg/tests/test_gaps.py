import itertools

import pytest
from hypothesis import given, strategies as st

from affsemi.errors import StateError
from affsemi.gaps import (
    NO, UNKNOWN, YES, decide_c_semigroup, decide_group_gaps, gaps, ray_diagnostics,
)
from affsemi.semigroup import AffineSemigroup

from conftest import DEGENERATE, FIVE, FIVE_GAPS, TEN, TWELVE
from oracles import numerical_sieve
from strategies import c_semigroups_2d, numerical


def test_five_generator_gaps():
    v = decide_c_semigroup(AffineSemigroup(FIVE))
    assert v.status == YES
    assert sorted(v.gaps) == sorted(FIVE_GAPS)
    assert len(v.gaps) == 12


def test_degenerate_is_not_c():
    v = decide_c_semigroup(AffineSemigroup(DEGENERATE))
    assert v.status == NO
    kinds = {r["reason"] for r in v.reasons}
    assert kinds == {"ray-gcd", "group-index"}
    idx = next(r for r in v.reasons if r["reason"] == "group-index")
    assert idx["index"] == 2


def test_twelve_generator_ray_certificate():
    S = AffineSemigroup(TWELVE)
    v = decide_c_semigroup(S)
    assert v.status == NO
    by_ray = {r["ray"]: r["gcd"] for r in v.reasons if r["reason"] == "ray-gcd"}
    assert by_ray == {(2, 1): 9, (6, 1): 3}
    diag = {d.ray: d.on_ray_multipliers for d in ray_diagnostics(S)}
    assert diag == {(2, 1): (9,), (6, 1): (3,)}


def test_ray_reached_only_at_even_multiples():
    S = AffineSemigroup([(1, 0), (2, 4)])
    v = decide_c_semigroup(S)
    assert v.status == NO and v.reasons[0]["reason"] == "ray-gcd"


def test_ten_generator_needs_more_than_a_small_bound():
    v = decide_c_semigroup(AffineSemigroup(TEN), nmax=16)
    assert v.status == UNKNOWN and v.nmax == 16 and v.unresolved


def test_gap_accessor_refuses_non_c():
    with pytest.raises(StateError) as info:
        gaps(AffineSemigroup(DEGENERATE))
    assert info.value.verdict.status == NO


def test_group_relative_gaps():
    g = decide_group_gaps(AffineSemigroup(DEGENERATE))
    assert g.status == YES and g.gaps == ()
    assert decide_group_gaps(AffineSemigroup(FIVE)).gaps == decide_c_semigroup(
        AffineSemigroup(FIVE)).gaps


def test_numerical_small():
    assert gaps(AffineSemigroup([(3,), (5,)])) == [(1,), (2,), (4,), (7,)]
    assert gaps(AffineSemigroup([(1,)])) == []


@given(numerical())
def test_d1_agrees_with_sieve(gens):
    _, gap_list, _, _ = numerical_sieve(gens)
    v = decide_c_semigroup(AffineSemigroup([(g,) for g in gens]))
    assert v.status == YES
    assert [h[0] for h in v.gaps] == gap_list


@given(c_semigroups_2d())
def test_gap_list_complete_on_box(gens):
    S = AffineSemigroup(gens)
    v = decide_c_semigroup(S)
    assert v.status == YES
    hs = set(v.gaps)
    for h in hs:
        assert h not in S and S.cone.contains(h)
    hi = max([max(h) for h in hs] + [0]) + 6
    side = min(hi, 31)
    fresh = AffineSemigroup(gens)
    for p in itertools.islice(itertools.product(range(side + 1), repeat=2), 1000):
        if fresh.cone.contains(p):
            assert (p in hs) == (p not in fresh)


@given(c_semigroups_2d(), st.data())
def test_adding_a_gap_shrinks_the_gap_set(gens, data):
    S = AffineSemigroup(gens)
    hs = decide_c_semigroup(S).gaps
    if not hs:
        return
    h = data.draw(st.sampled_from(hs))
    T = AffineSemigroup(list(gens) + [h])
    hs2 = decide_c_semigroup(T).gaps
    assert set(hs2) <= set(hs) - {h}


@given(c_semigroups_2d())
def test_saturation_table_witnesses(gens):
    S = AffineSemigroup(gens)
    v = decide_c_semigroup(S)
    for r, Ns in v.saturation:
        for N, e in zip(Ns, v.ray_elements):
            assert tuple(a + N * b for a, b in zip(r, e)) in S
            if N > 0:
                assert tuple(a + (N - 1) * b for a, b in zip(r, e)) not in S
