import itertools

import pytest
from hypothesis import given, strategies as st

from affsemi.errors import InputError
from affsemi.linalg import (
    Lattice, det, hnf, kernel, lattice_index, lattice_intersect, lattice_member, matmul,
    rank, saturation, solve_rational, xgcd,
)

ints = st.integers(-6, 6)


def matrices(rows=3, cols=4):
    return st.integers(1, rows).flatmap(lambda r: st.integers(1, cols).flatmap(
        lambda c: st.lists(st.lists(ints, min_size=c, max_size=c), min_size=r, max_size=r)))


def lattices(dim=3, max_gens=4):
    vec = st.lists(ints, min_size=dim, max_size=dim).map(tuple)
    return st.lists(vec, min_size=0, max_size=max_gens).map(
        lambda gs: Lattice.from_generators(gs, dim))


def test_xgcd_signs():
    for a, b in [(12, 18), (-12, 18), (0, 5), (5, 0), (0, 0), (-7, -3)]:
        g, x, y = xgcd(a, b)
        assert g >= 0 and x * a + y * b == g


@given(matrices())
def test_hnf_is_unimodular_transform(M):
    H, U = hnf(M)
    assert matmul(M, U) == H
    assert abs(det(U)) == 1


@given(matrices())
def test_hnf_echelon_shape(M):
    H, _ = hnf(M)
    k = len(H[0])
    nonzero = [j for j in range(k) if any(r[j] for r in H)]
    assert nonzero == list(range(len(nonzero)))
    last = -1
    for j in nonzero:
        p = next(i for i in range(len(H)) if H[i][j])
        assert p > last and H[p][j] > 0
        assert all(0 <= H[p][jj] < H[p][j] for jj in range(j))
        last = p


@given(matrices())
def test_kernel_vectors_vanish_and_count(M):
    k = len(M[0])
    K = kernel(M, k)
    for z in K:
        assert all(sum(r[j] * z[j] for j in range(k)) == 0 for r in M)
    assert len(K) == k - rank(M)


@given(lattices(), st.lists(ints, min_size=3, max_size=3))
def test_membership_coefficients(L, v):
    c = lattice_member(L, v)
    if c is not None:
        assert tuple(sum(ci * b[i] for ci, b in zip(c, L.basis)) for i in range(3)) == tuple(v)


@given(lattices(), lattices(), st.lists(st.integers(-8, 8), min_size=3, max_size=3))
def test_intersection_membership(L1, L2, v):
    I = lattice_intersect(L1, L2)
    assert (v in I) == (v in L1 and v in L2)


@given(lattices())
def test_saturation_contains_and_same_rank(L):
    sat = saturation(L)
    assert sat.rank == L.rank
    assert all(b in sat for b in L.basis)
    idx = lattice_index(L, sat)
    assert idx is not None and idx >= 1


def test_known_lattices():
    A = Lattice.from_generators([(1, 0, 0), (0, 1, 0)], 3)
    B = Lattice.from_generators([(1, 1, 0), (0, 0, 1)], 3)
    assert lattice_intersect(A, B).basis == ((1, 1, 0),)
    E = Lattice.from_generators([(2, 0), (0, 1)], 2)
    T = Lattice.from_generators([(1, 0), (0, 3)], 2)
    assert lattice_intersect(E, T) == Lattice.from_generators([(2, 0), (0, 3)], 2)
    G = Lattice.from_generators([(2, 0), (1, 1), (0, 2)], 2)
    assert lattice_index(G, saturation(G)) == 2


def test_order_independent_basis():
    gens = [(2, 0), (1, 1), (0, 2), (3, 5)]
    bases = {Lattice.from_generators(p, 2).basis for p in itertools.permutations(gens)}
    assert len(bases) == 1


def test_dimension_mismatch():
    with pytest.raises(InputError):
        Lattice.from_generators([(1, 2)], 3)


@given(matrices(3, 3))
def test_solve_rational(M):
    v = [1, 2, 3][:len(M)]
    sol = solve_rational(M, v)
    if sol is not None:
        assert [sum(r[j] * sol[j] for j in range(len(sol))) for r in M] == v
