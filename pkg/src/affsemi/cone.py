"""Exact rational polyhedral cones spanned by vectors of N^d.

Facets are found with the double description method applied to the dual
cone, inside coordinates of the linear span. The span is parametrised by
``span_dim`` ambient coordinates on which the projection is injective, so a
facet normal computed in span coordinates is also an ambient integer vector
(zero outside those coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import InputError
from .linalg import IntVec, kernel, orthogonal_complement, rank, solve_rational


def primitive(v: Sequence) -> IntVec:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in ints)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _select_span_coords(gens: list[IntVec], d: int) -> tuple[int, ...]:
    """Ambient coordinates on which projection of the span is injective."""
    chosen: list[int] = []
    r = 0
    for i in range(d):
        rows = [[g[k] for g in gens] for k in chosen + [i]]
        rr = rank(rows, len(gens))
        if rr > r:
            chosen.append(i)
            r = rr
    return tuple(chosen)


def _dual_rays(rows: list[IntVec], r: int) -> list[IntVec]:
    """Extreme rays of ``{y in Q^r : row·y >= 0 for every row}``.

    The rows span Q^r, so this cone is pointed. Incremental double
    description with the algebraic adjacency test.
    """
    basis_idx: list[int] = []
    for i in range(len(rows)):
        if rank([list(rows[k]) for k in basis_idx + [i]], r) > len(basis_idx):
            basis_idx.append(i)
        if len(basis_idx) == r:
            break
    # rays of {y : A0 y >= 0} are the columns of A0^{-1}
    A0 = [list(rows[k]) for k in basis_idx]
    rays = []
    for j in range(r):
        e = [int(i == j) for i in range(r)]
        rays.append(primitive(solve_rational(A0, e)))
    processed = list(basis_idx)
    for i in range(len(rows)):
        if i in basis_idx:
            continue
        a = rows[i]
        vals = [dot(a, y) for y in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        zero = [k for k, s in enumerate(vals) if s == 0]
        if not neg:
            processed.append(i)
            continue
        tight = [frozenset(k for k in processed if dot(rows[k], y) == 0) for y in rays]
        new = [rays[k] for k in pos + zero]
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < r - 2:
                    continue
                if rank([list(rows[k]) for k in common], r) != r - 2:
                    continue
                comb = [vals[p] * yq - vals[q] * yp for yp, yq in zip(rays[p], rays[q])]
                new.append(primitive(comb))
        rays = sorted(set(new))
        processed.append(i)
    return sorted(set(rays))


@dataclass(frozen=True)
class Cone:
    """The cone ``pos(generators)`` with its exact H- and V-descriptions.

    ``facets`` are primitive inward normals: a point ``x`` of the linear span
    lies in the cone iff ``n·x >= 0`` for every facet normal ``n``.
    ``equations`` is an integer basis of the orthogonal complement of the span.
    """

    ambient_dim: int
    generators: tuple[IntVec, ...]
    extreme_rays: tuple[IntVec, ...]
    facets: tuple[IntVec, ...]
    equations: tuple[IntVec, ...]
    span_dim: int

    def contains(self, v) -> bool:
        return cone_contains(self, v)

    def relint_contains(self, v) -> bool:
        return relint_contains(self, v)


def cone_of(generators: Sequence[Sequence[int]], dim: int | None = None) -> Cone:
    gens = [tuple(int(x) for x in g) for g in generators]
    if dim is None:
        if not gens:
            raise InputError("dimension required for an empty generator list")
        dim = len(gens[0])
    for g in gens:
        if len(g) != dim:
            raise InputError(f"generator {g} does not have dimension {dim}")
        if any(x < 0 for x in g) or not any(g):
            raise InputError(f"generator {g} must be a nonzero vector of N^{dim}")
    if not gens:
        eqs = orthogonal_complement([], dim)
        return Cone(dim, (), (), (), tuple(eqs), 0)
    coords = _select_span_coords(gens, dim)
    r = len(coords)
    eqs = tuple(kernel([list(g) for g in gens], dim))
    proj = [tuple(g[i] for i in coords) for g in gens]

    def lift(y):
        n = [0] * dim
        for i, c in zip(coords, y):
            n[i] = c
        return tuple(n)

    if r == 1:
        sign = 1 if proj[0][0] > 0 else -1
        facets = (lift((sign,)),)
    else:
        facets = tuple(sorted(lift(y) for y in _dual_rays(sorted(set(proj)), r)))
    rays = set()
    for g in gens:
        if r == 1:
            rays.add(primitive(g))
            continue
        tight = [list(n) for n in facets if dot(n, g) == 0]
        if tight and rank(tight, dim) == r - 1:
            rays.add(primitive(g))
    return Cone(dim, tuple(gens), tuple(sorted(rays)), facets, eqs, r)


def _in_span(C: Cone, v) -> bool:
    return all(dot(e, v) == 0 for e in C.equations)


def cone_contains(C: Cone, v) -> bool:
    if len(v) != C.ambient_dim:
        raise InputError("dimension mismatch")
    return _in_span(C, v) and all(dot(n, v) >= 0 for n in C.facets)


def relint_contains(C: Cone, v) -> bool:
    """Strict facet inequalities within the span. The apex of a nonzero cone is excluded."""
    if len(v) != C.ambient_dim:
        raise InputError("dimension mismatch")
    if C.span_dim == 0:
        return not any(v)
    return _in_span(C, v) and all(dot(n, v) > 0 for n in C.facets)


def positive_functional(C: Cone, w: Sequence[int] | None = None) -> IntVec:
    """A grading ``w`` with ``w·g > 0`` on every generator; all-ones by default."""
    w = tuple(w) if w is not None else (1,) * C.ambient_dim
    if len(w) != C.ambient_dim:
        raise InputError("grading has the wrong dimension")
    for g in C.generators:
        if dot(w, g) <= 0:
            raise InputError(f"grading {w} is not positive on generator {g}")
    return w
