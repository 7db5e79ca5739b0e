"""Finitely generated submonoids of N^d and exact membership.

Single queries run a depth-first search that subtracts generators from the
target, memoised on the residual vector and pruned by the cone. Bulk queries
(gap enumeration, bounded scans) build a boolean reachability table over a
box with numpy, which answers the same question for every point at once.
Both paths pick the same witness: the smallest generator index ``i`` with
``x - a_i`` in S, followed recursively. That makes answers independent of
call order and of which path produced them.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .cone import Cone, cone_of, dot, positive_functional
from .errors import InputError
from .linalg import IntVec, Lattice, lattice_member

# upper bound on cells of a reachability table before falling back to DFS
TABLE_LIMIT = 60_000_000


def sort_key(v, grading=None):
    return (dot(grading, v) if grading is not None else sum(v), tuple(v))


def canonical(vectors: Iterable, grading=None) -> list[IntVec]:
    return sorted({tuple(v) for v in vectors}, key=lambda v: sort_key(v, grading))


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: Optional[tuple[int, ...]] = None
    explored_levels: Optional[int] = None

    def __bool__(self):
        return self.member


class MembershipTable:
    """Membership of every lattice point of ``[0, box]`` in S."""

    def __init__(self, gens: Sequence[IntVec], box: IntVec):
        self.box = tuple(box)
        R = np.zeros(tuple(b + 1 for b in box), dtype=bool)
        R[(0,) * len(box)] = True
        for g in gens:
            step = 1
            while True:
                s = tuple(step * x for x in g)
                if any(si > bi for si, bi in zip(s, box)):
                    break
                dst = tuple(slice(si, None) for si in s)
                src = tuple(slice(0, bi + 1 - si) for si, bi in zip(s, box))
                # overlapping operands behave as if copied, which the doubling relies on
                R[dst] |= R[src]
                step *= 2
        self.array = R

    def covers(self, x) -> bool:
        return all(0 <= xi <= bi for xi, bi in zip(x, self.box))

    def __getitem__(self, x) -> bool:
        return bool(self.array[tuple(x)])

    def points(self) -> list[IntVec]:
        return [tuple(int(c) for c in p) for p in np.argwhere(self.array)]


def table_size(box) -> int:
    n = 1
    for b in box:
        n *= b + 1
    return n


class AffineSemigroup:
    """The submonoid of N^d generated by a finite list of nonzero vectors.

    Generator order is kept as given; witnesses are indexed by it.
    """

    def __init__(self, gens: Sequence[Sequence[int]], dim: Optional[int] = None,
                 grading: Optional[Sequence[int]] = None):
        gens = [tuple(int(x) for x in g) for g in gens]
        if dim is None:
            if not gens:
                raise InputError("dimension required for an empty generator list")
            dim = len(gens[0])
        if dim < 1:
            raise InputError("dimension must be at least 1")
        for g in gens:
            if len(g) != dim:
                raise InputError(f"generator {g} does not have dimension {dim}")
            if any(x < 0 for x in g):
                raise InputError(f"generator {g} has a negative entry")
            if not any(g):
                raise InputError("the zero vector is not allowed as a generator")
        if len(set(gens)) != len(gens):
            raise InputError("duplicate generators")
        self.dim = dim
        self.gens: tuple[IntVec, ...] = tuple(gens)
        self.cone: Cone = cone_of(gens, dim)
        self.grading = positive_functional(self.cone, grading)
        self._zero = (0,) * dim
        # residual -> index of first generator leading to a member, -1 for 0, None for non-member
        self._memo: dict[IntVec, Optional[int]] = {self._zero: -1}
        self._table: Optional[MembershipTable] = None
        self._lock = threading.RLock()

    def __repr__(self):
        return f"AffineSemigroup({[list(g) for g in self.gens]})"

    def __eq__(self, other):
        return isinstance(other, AffineSemigroup) and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash(frozenset(self.gens))

    @property
    def n(self) -> int:
        return len(self.gens)

    @cached_property
    def group(self) -> Lattice:
        return Lattice.from_generators(self.gens, self.dim)

    def degree(self, x) -> int:
        return dot(self.grading, x)

    def key(self, x):
        return sort_key(x, self.grading)

    def sorted(self, vectors: Iterable) -> list[IntVec]:
        return canonical(vectors, self.grading)

    # -- membership -------------------------------------------------------

    def _check(self, x) -> IntVec:
        x = tuple(int(v) for v in x)
        if len(x) != self.dim:
            raise InputError(f"vector {x} does not have dimension {self.dim}")
        return x

    def _viable(self, x) -> bool:
        return all(v >= 0 for v in x) and self.cone.contains(x)

    def ensure_table(self, box) -> Optional[MembershipTable]:
        """Build (or reuse) a reachability table covering ``box``; None if too large."""
        box = tuple(int(b) for b in box)
        with self._lock:
            t = self._table
            if t is not None and all(b <= tb for b, tb in zip(box, t.box)):
                return t
            if t is not None:
                box = tuple(max(b, tb) for b, tb in zip(box, t.box))
            if table_size(box) > TABLE_LIMIT:
                return None
            self._table = MembershipTable(self.gens, box)
            return self._table

    def _contains(self, x: IntVec) -> bool:
        if any(v < 0 for v in x):
            return False
        t = self._table
        if t is not None and t.covers(x):
            return t[x]
        return self._dfs(x)

    def _dfs(self, x: IntVec) -> bool:
        memo = self._memo
        if x in memo:
            return memo[x] is not None
        if not self._viable(x) or lattice_member(self.group, x) is None:
            with self._lock:
                memo[x] = None
            return False
        gens = self.gens
        stack = [[x, 0]]
        with self._lock:
            while stack:
                frame = stack[-1]
                node, i = frame
                if node in memo:
                    stack.pop()
                    continue
                pushed = False
                while i < len(gens):
                    child = tuple(a - b for a, b in zip(node, gens[i]))
                    if child in memo:
                        if memo[child] is not None:
                            break
                        i += 1
                        continue
                    if not self._viable(child):
                        memo[child] = None
                        i += 1
                        continue
                    frame[1] = i
                    stack.append([child, 0])
                    pushed = True
                    break
                if pushed:
                    continue
                memo[node] = i if i < len(gens) else None
                stack.pop()
        return memo[x] is not None

    def _next_index(self, x: IntVec) -> int:
        if x in self._memo and self._memo[x] is not None:
            return self._memo[x]
        for i, g in enumerate(self.gens):
            if self._contains(tuple(a - b for a, b in zip(x, g))):
                return i
        raise AssertionError("member without a predecessor")

    def witness(self, x) -> tuple[int, ...]:
        """Coefficients ``u`` with ``sum(u_i a_i) == x``; x must be a member."""
        x = self._check(x)
        u = [0] * self.n
        while any(x):
            i = self._next_index(x)
            u[i] += 1
            x = tuple(a - b for a, b in zip(x, self.gens[i]))
        return tuple(u)

    def member(self, x) -> MembershipResult:
        x = self._check(x)
        if self._contains(x):
            return MembershipResult(True, self.witness(x))
        return MembershipResult(False, None, self.degree(x) if all(v >= 0 for v in x) else None)

    def __contains__(self, x) -> bool:
        return self._contains(self._check(x))

    def combine(self, u: Sequence[int]) -> IntVec:
        return tuple(sum(ui * g[k] for ui, g in zip(u, self.gens)) for k in range(self.dim))

    # -- derived structure ------------------------------------------------

    def minimal_generators(self) -> list[IntVec]:
        keep = []
        for i, g in enumerate(self.gens):
            others = self.gens[:i] + self.gens[i + 1:]
            if not others or g not in AffineSemigroup(others, self.dim):
                keep.append(g)
        return keep

    def leq(self, x, y) -> bool:
        x, y = self._check(x), self._check(y)
        return self._contains(tuple(b - a for a, b in zip(x, y)))

    def maximals(self, F: Iterable) -> list[IntVec]:
        F = canonical(F, self.grading)
        return [m for m in F if not any(f != m and self.leq(m, f) for f in F)]

    def enumerate_upto(self, box) -> list[IntVec]:
        box = self._check(box)
        if any(b < 0 for b in box):
            raise InputError("box must be nonnegative")
        if self.ensure_table(box) is not None:
            pts = [p for p in self._table.points() if all(a <= b for a, b in zip(p, box))]
        else:
            pts = [p for p in itertools.product(*(range(b + 1) for b in box)) if self._contains(p)]
        return self.sorted(pts)


def member(S: AffineSemigroup, x) -> MembershipResult:
    return S.member(x)


def minimal_generators(S: AffineSemigroup) -> list[IntVec]:
    return S.minimal_generators()


def group(S: AffineSemigroup) -> Lattice:
    return S.group


def leq_S(S: AffineSemigroup, x, y) -> bool:
    return S.leq(x, y)


def maximals_leq_S(S: AffineSemigroup, F: Iterable) -> list[IntVec]:
    return S.maximals(F)


def enumerate_upto(S: AffineSemigroup, box) -> list[IntVec]:
    return S.enumerate_upto(box)


def box_points(box) -> Iterable[IntVec]:
    return itertools.product(*(range(int(b) + 1) for b in box))
