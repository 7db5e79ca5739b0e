"""PI-monoids: monoids of the form (a + T) ∪ {0} with a in T \\ {0}.

``is_pi_monoid`` tests closure of (S \\ {0}) - m(S) only on pairs of minimal
generators. That suffices: for s, t in S \\ {0} write s = g + s' with g a
minimal generator; if s' ≠ 0 then s + t - m = g + (s' + t - m) and we recurse
on s', otherwise s + t - m = g + t - m and we recurse on t the same way,
ending at g + g' - m plus an element of S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from ..errors import ConsistencyError, InputError, PreconditionError
from ..frobenius import (
    CLASSICAL, AperySet, MPDVerdict, PFResult, _classical_apery, apery, default_box, is_mpd,
)
from ..gaps import DEFAULT_NMAX
from ..linalg import IntVec
from ..semigroup import AffineSemigroup, box_points, canonical


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True)
class PIMonoid:
    """``(a + T) ∪ {0}`` where T is generated by ``t_gens``."""

    a: IntVec
    t_gens: tuple[IntVec, ...]
    a_witness: tuple[int, ...] = field(default=(), compare=False)

    @cached_property
    def T(self) -> AffineSemigroup:
        return AffineSemigroup(self.t_gens, len(self.a))

    @property
    def dim(self) -> int:
        return len(self.a)

    def __contains__(self, x) -> bool:
        x = tuple(x)
        if not any(x):
            return True
        y = _sub(x, self.a)
        return all(v >= 0 for v in y) and y in self.T

    def member(self, x) -> bool:
        return x in self


def pi_construct(t_gens: Sequence[Sequence[int]], a) -> PIMonoid:
    a = tuple(int(x) for x in a)
    T = AffineSemigroup(t_gens, len(a))
    if not any(a):
        raise PreconditionError("a must be nonzero")
    res = T.member(a)
    if not res.member:
        raise PreconditionError(f"{a} is not in T")
    P = PIMonoid(a, T.gens, res.witness)
    P.__dict__["T"] = T
    return P


def multiplicity(S) -> IntVec:
    """Componentwise infimum of S \\ {0}; for a PI-monoid this is a itself."""
    if isinstance(S, PIMonoid):
        return S.a
    if not S.gens:
        raise InputError("no generators")
    return tuple(min(g[k] for g in S.gens) for k in range(S.dim))


@dataclass(frozen=True)
class PICheck:
    is_pi: bool
    m: IntVec
    reason: str
    # (i, j) -> witness of g_i + g_j - m in S, over minimal generator pairs
    witnesses: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.is_pi


def is_pi_monoid(S) -> PICheck:
    if isinstance(S, PIMonoid):
        return PICheck(True, S.a, "given-as-pi")
    m = multiplicity(S)
    if not any(m):
        return PICheck(False, m, "multiplicity-zero")
    if m not in S:
        return PICheck(False, m, "multiplicity-not-in-S")
    mins = S.minimal_generators()
    wits = {}
    for i, g in enumerate(mins):
        for j in range(i, len(mins)):
            x = _sub(_add(g, mins[j]), m)
            res = S.member(x)
            if not res.member:
                return PICheck(False, m, f"{g}+{mins[j]}-m not in S")
            wits[(i, j)] = res.witness
    return PICheck(True, m, "pairwise-closure", wits)


def pi_decompose(S: AffineSemigroup) -> PIMonoid:
    """The unique (a, T) with S = (a + T) ∪ {0}: a = m(S), T = (S \\ {0}) - m(S)."""
    chk = is_pi_monoid(S)
    if not chk:
        raise PreconditionError(f"not a PI-monoid ({chk.reason})")
    m = chk.m
    tg = {_sub(g, m) for g in S.minimal_generators()} | {m}
    tg.discard((0,) * S.dim)
    T = AffineSemigroup(canonical(tg), S.dim)
    return pi_construct(T.minimal_generators(), m)


def canonical_pi_of(S: AffineSemigroup) -> PIMonoid:
    """``(min_lex(S \\ {0}) + S) ∪ {0}``.

    Every element of S \\ {0} dominates some generator componentwise, hence
    also lexicographically, so the lex-least nonzero element is a generator.
    """
    return pi_construct(S.gens, min(S.gens))


def pi_apery(P: PIMonoid, box=None) -> AperySet:
    """Classical Ap(P, a) = {0} ∪ (a + (Ap(T, a) \\ {0})), truncated to ``box``."""
    if box is None:
        tbox = _add(P.a, default_box(P.T))
    else:
        box = tuple(int(b) for b in box)
        tbox = tuple(max(0, b - x) for b, x in zip(box, P.a))
    elems, complete = _classical_apery(P.T, P.a, tbox)
    zero = (0,) * P.dim
    out = [zero] + [_add(P.a, t) for t in elems if any(t)]
    return AperySet(P.a, CLASSICAL, tuple(canonical(out)), complete,
                    box if box is not None else _add(P.a, tbox))


def pi_minimal_generators(P: PIMonoid, box=None) -> tuple[list[IntVec], bool]:
    ap = pi_apery(P, box)
    return canonical([P.a] + [x for x in ap.elements if any(x)]), ap.complete


def pi_is_pseudo_frobenius(P: PIMonoid, x) -> bool:
    """x ∉ P and x + s ∈ P for all s ∈ P \\ {0} = a + T.

    The second condition is x + t ∈ T for all t ∈ T, i.e. x ∈ T.
    """
    x = tuple(x)
    if x in P or any(v < 0 for v in x) or x not in P.T:
        return False
    return all(_add(_add(x, P.a), t) in P for t in ((0,) * P.dim,) + P.t_gens)


def pi_pseudo_frobenius(P: PIMonoid, box=None) -> PFResult:
    ap = pi_apery(P, box)
    pf = [_sub(x, P.a) for x in ap.elements if any(x)]
    for x in pf:
        if not pi_is_pseudo_frobenius(P, x):
            raise ConsistencyError(f"{x} failed the pseudo-Frobenius check")
    return PFResult(tuple(canonical(pf)), ap.complete, "apery-maximals", ap.search_box)


@dataclass(frozen=True)
class LimitMember:
    """One semigroup S_λ of the direct system, with its MPD verdict."""
    semigroup: AffineSemigroup
    lam: tuple[IntVec, ...]
    mpd: MPDVerdict


def direct_limit_family(P: PIMonoid, lam: Iterable, nmax: int = DEFAULT_NMAX) -> LimitMember:
    """The affine semigroup generated by ``lam ∪ {m}`` for ``lam ⊆ m + PF(P)``.

    Containment in P is verified. The MPD status is computed and reported,
    not assumed: S_λ can equal pos(S_λ) ∩ Z^d and then has no
    pseudo-Frobenius element (e.g. P = (1,1) + N^2, lam = {(2,1), (1,2)}).
    """
    lam = canonical(tuple(int(v) for v in x) for x in lam)
    for x in lam:
        if len(x) != P.dim:
            raise InputError(f"{x} has the wrong dimension")
        if not pi_is_pseudo_frobenius(P, _sub(x, P.a)):
            raise PreconditionError(f"{x} is not in m + PF")
    S = AffineSemigroup(canonical([P.a] + lam), P.dim)
    if not all(g in P for g in S.gens):
        raise ConsistencyError("family member is not contained in P")
    return LimitMember(S, tuple(lam), is_mpd(S, nmax))


def _pf_from_apery(S: AffineSemigroup, ap: AperySet) -> list[IntVec]:
    # Ap = {0} (S = pos(S) ∩ Z^d locally) would give -base, which is not a gap
    return [_sub(x, ap.base) for x in S.maximals(ap.elements) if any(x)]


def pi_conditions(S: AffineSemigroup, box=None) -> dict[str, bool]:
    """The four equivalent PI characterisations, evaluated independently.

    ``representation``: S agrees with (m + T) ∪ {0} on ``box`` for the
    smallest candidate T. ``closure``: :func:`is_pi_monoid`. ``apery_generators``
    and ``pf_generators``: {m} ∪ (Ap(S, m) \\ {0}) resp. {m} ∪ (m + PF(S)) is the
    minimal generating set.
    """
    m = multiplicity(S)
    out = dict(representation=False, closure=False, apery_generators=False,
               pf_generators=False)
    if not any(m) or m not in S:
        return out
    box = tuple(box) if box is not None else default_box(S)
    tg = {_sub(g, m) for g in S.gens} | {m}
    tg.discard((0,) * S.dim)
    T = AffineSemigroup(canonical(tg), S.dim)
    out["representation"] = all(
        (p in S) == (not any(p) or (all(v >= 0 for v in _sub(p, m)) and _sub(p, m) in T))
        for p in box_points(box))
    out["closure"] = is_pi_monoid(S).is_pi
    ap = apery(S, m, CLASSICAL)
    mins = set(S.minimal_generators())
    if ap.complete:
        out["apery_generators"] = {m} | {x for x in ap.elements if any(x)} == mins
        pf = _pf_from_apery(S, ap)
        out["pf_generators"] = {m} | {_add(m, x) for x in pf} == mins
    return out
