"""Deciding whether S is a C-semigroup and enumerating its gap set.

A "No" comes with a reason checkable from the generators alone. A "Yes"
comes with a saturation table: on each extreme ray j we fix an element
e_j of S, and for every point r of the fundamental box we record the least
N with r + N·e_j in S. Every lattice point of the cone is r + Σ n_j e_j for
some r in the box, and it lies in S as soon as some n_j >= N_{r,j}; so the
gaps are among the finitely many points with n_j < N_{r,j} for all j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional

from .errors import StateError
from .linalg import IntVec, Lattice, lattice_index, lattice_member, saturation
from .semigroup import AffineSemigroup, box_points, table_size, TABLE_LIMIT

DEFAULT_NMAX = 1024

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class RayDiagnostic:
    ray: IntVec
    on_ray_multipliers: tuple[int, ...]
    gcd: int


@dataclass(frozen=True)
class CSemVerdict:
    status: str
    gaps: tuple[IntVec, ...] = ()
    ray_elements: tuple[IntVec, ...] = ()
    # (r, (N_{r,1}, ..., N_{r,k})) for every r in the fundamental box
    saturation: tuple[tuple[IntVec, tuple[int, ...]], ...] = ()
    reasons: tuple[dict, ...] = ()
    nmax: Optional[int] = None
    unresolved: tuple[tuple[IntVec, int], ...] = field(default=(), repr=False)

    @property
    def is_yes(self) -> bool:
        return self.status == YES


def ray_diagnostics(S: AffineSemigroup) -> list[RayDiagnostic]:
    out = []
    for ray in S.cone.extreme_rays:
        k = next(i for i, x in enumerate(ray) if x)
        mults = sorted(g[k] // ray[k] for g in S.gens
                       if all(g[i] * ray[k] == ray[i] * g[k] for i in range(S.dim)))
        out.append(RayDiagnostic(ray, tuple(mults), reduce(gcd, mults, 0)))
    return out


def _lattice_step(ray: IntVec, L: Lattice) -> int:
    """Smallest k > 0 with k·ray in L (L has finite index in the span lattice)."""
    k = 1
    while lattice_member(L, tuple(k * x for x in ray)) is None:
        k += 1
    return k


def _caps(nmax: int):
    c = 16
    while c < nmax:
        yield c
        c *= 8
    yield nmax


def _least_multiplier(S, r, e, lo, cap):
    for N in range(lo, cap + 1):
        if tuple(a + N * b for a, b in zip(r, e)) in S:
            return N
    return None


def saturate(S: AffineSemigroup, L: Lattice, ray_elements: list[IntVec], nmax: int
             ) -> CSemVerdict:
    """Gaps of S relative to ``L ∩ pos(S)`` by the saturation argument.

    ``ray_elements`` must be elements of S, one on each extreme ray.
    """
    d = S.dim
    top = tuple(sum(e[i] for e in ray_elements) for i in range(d))
    fundamental = [r for r in box_points(top)
                   if S.cone.contains(r) and lattice_member(L, r) is not None]
    k = len(ray_elements)
    found: dict[tuple[IntVec, int], int] = {}
    pending = [(r, j) for r in fundamental for j in range(k)]
    reach = tuple(max(e[i] for e in ray_elements) for i in range(d))
    tried = 0
    for cap in _caps(nmax):
        box = tuple(t + cap * m for t, m in zip(top, reach))
        if table_size(box) <= TABLE_LIMIT:
            S.ensure_table(box)
        rest = []
        for r, j in pending:
            N = _least_multiplier(S, r, ray_elements[j], tried, cap)
            if N is None:
                rest.append((r, j))
            else:
                found[(r, j)] = N
        pending = rest
        tried = cap + 1
        if not pending:
            break
    if pending:
        return CSemVerdict(UNKNOWN, ray_elements=tuple(ray_elements), nmax=nmax,
                           unresolved=tuple(pending))
    table = tuple((r, tuple(found[(r, j)] for j in range(k))) for r in fundamental)
    candidates = set()
    for r, Ns in table:
        for ns in itertools.product(*(range(N) for N in Ns)):
            candidates.add(tuple(r[i] + sum(n * e[i] for n, e in zip(ns, ray_elements))
                                 for i in range(d)))
    if candidates:
        hi = tuple(max(c[i] for c in candidates) for i in range(d))
        if table_size(hi) <= TABLE_LIMIT:
            S.ensure_table(hi)
    gap_list = S.sorted(c for c in candidates if c not in S)
    return CSemVerdict(YES, gaps=tuple(gap_list), ray_elements=tuple(ray_elements),
                       saturation=table, nmax=nmax)


def c_semigroup_obstructions(S: AffineSemigroup) -> list[dict]:
    """Reasons forcing infinitely many gaps in ``pos(S) ∩ Z^d``."""
    reasons = []
    for diag in ray_diagnostics(S):
        if not diag.on_ray_multipliers:
            reasons.append({"reason": "ray-without-generators", "ray": diag.ray})
        elif diag.gcd > 1:
            reasons.append({"reason": "ray-gcd", "ray": diag.ray, "gcd": diag.gcd,
                            "multipliers": diag.on_ray_multipliers})
    G = S.group
    sat = saturation(G)
    if G != sat:
        reasons.append({"reason": "group-index", "index": lattice_index(G, sat),
                        "group_basis": G.basis, "span_lattice_basis": sat.basis})
    return reasons


def decide_c_semigroup(S: AffineSemigroup, nmax: int = DEFAULT_NMAX) -> CSemVerdict:
    if nmax < 1:
        raise ValueError("nmax must be positive")
    reasons = c_semigroup_obstructions(S)
    if reasons:
        return CSemVerdict(NO, reasons=tuple(reasons), nmax=nmax)
    ray_elements = [tuple(diag.on_ray_multipliers[0] * x for x in diag.ray)
                    for diag in ray_diagnostics(S)]
    return saturate(S, S.group, ray_elements, nmax)


def decide_group_gaps(S: AffineSemigroup, nmax: int = DEFAULT_NMAX) -> CSemVerdict:
    """Same as :func:`decide_c_semigroup` but relative to the lattice G(S).

    Gaps here are points of ``G(S) ∩ pos(S)`` outside S. No is returned when
    some extreme ray meets S in a non-cofinite part of ``G(S)``.
    """
    G = S.group
    reasons = []
    ray_elements = []
    for diag in ray_diagnostics(S):
        if not diag.on_ray_multipliers:
            reasons.append({"reason": "ray-without-generators", "ray": diag.ray})
            continue
        step = _lattice_step(diag.ray, G)
        rel = reduce(gcd, (m // step for m in diag.on_ray_multipliers), 0)
        if rel > 1:
            reasons.append({"reason": "ray-gcd", "ray": diag.ray, "gcd": rel,
                            "lattice_step": step})
        ray_elements.append(tuple(diag.on_ray_multipliers[0] * x for x in diag.ray))
    if reasons:
        return CSemVerdict(NO, reasons=tuple(reasons), nmax=nmax)
    return saturate(S, G, ray_elements, nmax)


def gaps(S: AffineSemigroup, verdict: Optional[CSemVerdict] = None,
         nmax: int = DEFAULT_NMAX) -> list[IntVec]:
    """The gap set H(S); raises StateError unless S is a certified C-semigroup."""
    if verdict is None:
        verdict = decide_c_semigroup(S, nmax)
    if not verdict.is_yes:
        raise StateError(f"gap set is only available for C-semigroups (verdict: {verdict.status})",
                         verdict)
    return list(verdict.gaps)
