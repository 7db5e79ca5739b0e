"""Exact integer linear algebra: Hermite normal form and lattices in Z^d.

Matrices are lists of rows of Python ints. Vectors are tuples of ints.
Every routine is exact; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError

IntVec = tuple  # tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def transpose(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[list[int]]:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(ncols)] for row in A]


def columns(M: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    return [tuple(row[j] for row in M) for j in range(ncols)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> list[list[int]]:
    return [[c[i] for c in cols] for i in range(nrows)]


def _col_combine(M, j1, j2, a, b, c, d):
    """Replace columns (j1, j2) by (a*c1 + b*c2, c*c1 + d*c2)."""
    for row in M:
        x, y = row[j1], row[j2]
        row[j1] = a * x + b * y
        row[j2] = c * x + d * y


def hnf(M: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``H == M @ U``, ``U`` unimodular, and ``H`` in
    column echelon form: each pivot is positive, entries to the left of a
    pivot in its row lie in ``[0, pivot)``, and zero columns come last.
    ``ncols`` is only needed when ``M`` has no rows.
    """
    nrows = len(M)
    k = len(M[0]) if nrows else (ncols or 0)
    H = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    pc = 0
    for i in range(nrows):
        if pc == k:
            break
        row = H[i]
        for j in range(pc + 1, k):
            if row[j] == 0:
                continue
            a, b = row[pc], row[j]
            g, x, y = xgcd(a, b)
            # det [[x, -b/g], [y, a/g]] = 1
            _col_combine(H, pc, j, x, y, -b // g, a // g)
            _col_combine(U, pc, j, x, y, -b // g, a // g)
        p = row[pc]
        if p == 0:
            continue
        if p < 0:
            for R in (H, U):
                for r in R:
                    r[pc] = -r[pc]
            p = -p
        for j in range(pc):
            q = row[j] // p
            if q:
                for R in (H, U):
                    for r in R:
                        r[j] -= q * r[pc]
        pc += 1
    return H, U


def rank(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    H, _ = hnf(M, ncols)
    k = len(H[0]) if H else 0
    return sum(1 for j in range(k) if any(r[j] for r in H))


def kernel(M: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """A Z-basis of the integer kernel ``{x in Z^ncols : M x = 0}``."""
    H, U = hnf(M, ncols)
    r = sum(1 for j in range(ncols) if any(row[j] for row in H))
    return [tuple(U[i][j] for i in range(ncols)) for j in range(r, ncols)]


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for s in range(k + 1, n):
                if A[s][k]:
                    A[k], A[s] = A[s], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_rational(M: Sequence[Sequence[int]], v: Sequence) -> Optional[list[Fraction]]:
    """Some rational solution of ``M x = v``, or None when inconsistent."""
    nrows = len(M)
    k = len(M[0]) if nrows else 0
    A = [[Fraction(x) for x in row] + [Fraction(v[i])] for i, row in enumerate(M)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if any(A[i][k] != 0 for i in range(r, nrows)):
        return None
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = A[i][k]
    return x


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^d, stored by its canonical column HNF basis.

    ``basis`` holds the nonzero HNF columns; the zero lattice has an empty
    basis. Two lattices are equal iff their bases are identical.
    """

    ambient_dim: int
    basis: tuple[IntVec, ...]
    pivots: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]], dim: int) -> "Lattice":
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if len(g) != dim:
                raise InputError(f"vector {g} does not have dimension {dim}")
        if not gens:
            return cls(dim, (), ())
        H, _ = hnf(from_columns(gens, dim))
        basis, pivots = [], []
        for col in columns(H, len(gens)):
            if any(col):
                basis.append(col)
                pivots.append(next(i for i, x in enumerate(col) if x))
        return cls(dim, tuple(basis), tuple(pivots))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def hnf(self) -> list[list[int]]:
        return from_columns(self.basis, self.ambient_dim)

    def __contains__(self, v) -> bool:
        return lattice_member(self, v) is not None


def _check_dim(L: Lattice, v) -> None:
    if len(v) != L.ambient_dim:
        raise InputError(f"vector of length {len(v)} in a lattice of dimension {L.ambient_dim}")


def lattice_member(L: Lattice, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Integer coefficients ``c`` with ``sum(c_k * basis_k) == v``, or None."""
    _check_dim(L, v)
    res = [int(x) for x in v]
    coeffs = []
    row = 0
    for b, p in zip(L.basis, L.pivots):
        if any(res[i] for i in range(row, p)):
            return None
        q, r = divmod(res[p], b[p])
        if r:
            return None
        if q:
            for i in range(p, L.ambient_dim):
                res[i] -= q * b[i]
        coeffs.append(q)
        row = p + 1
    if any(res):
        return None
    return tuple(coeffs)


def lattice_intersect(L1: Lattice, L2: Lattice) -> Lattice:
    """The lattice ``L1 ∩ L2``, via the kernel of ``[B1 | -B2]``."""
    if L1.ambient_dim != L2.ambient_dim:
        raise InputError("lattices live in different ambient dimensions")
    d = L1.ambient_dim
    r1, r2 = L1.rank, L2.rank
    if r1 == 0 or r2 == 0:
        return Lattice(d, (), ())
    stacked = from_columns(list(L1.basis) + [tuple(-x for x in b) for b in L2.basis], d)
    gens = []
    for z in kernel(stacked, r1 + r2):
        gens.append(tuple(sum(z[k] * L1.basis[k][i] for k in range(r1)) for i in range(d)))
    return Lattice.from_generators(gens, d)


def orthogonal_complement(vectors: Sequence[Sequence[int]], dim: int) -> list[IntVec]:
    """Integer basis of ``{x : x·v = 0 for every v}``."""
    return kernel([list(v) for v in vectors], dim) if vectors else [
        tuple(int(i == j) for i in range(dim)) for j in range(dim)]


def saturation(L: Lattice) -> Lattice:
    """``span_Q(L) ∩ Z^d``."""
    d = L.ambient_dim
    eqs = orthogonal_complement(L.basis, d)
    if not eqs:
        return Lattice.from_generators([tuple(int(i == j) for i in range(d)) for j in range(d)], d)
    return Lattice.from_generators(kernel([list(e) for e in eqs], d), d)


def lattice_index(sub: Lattice, sup: Lattice) -> Optional[int]:
    """``[sup : sub]`` when ``sub ⊆ sup`` with equal rank, else None."""
    if sub.rank != sup.rank:
        return None
    coords = []
    for b in sub.basis:
        c = lattice_member(sup, b)
        if c is None:
            return None
        coords.append(c)
    return abs(det(from_columns(coords, sup.rank))) if coords else 1
