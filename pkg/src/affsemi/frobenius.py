"""Apéry sets, pseudo-Frobenius and Frobenius elements, and the MPD verdict."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .cone import dot
from .errors import ConsistencyError, InputError, PreconditionError, StateError
from .gaps import DEFAULT_NMAX, NO, UNKNOWN, YES, CSemVerdict, decide_c_semigroup, decide_group_gaps
from .linalg import IntVec, lattice_member, rank
from .lp import feasible_ge
from .semigroup import AffineSemigroup, box_points, canonical, table_size, TABLE_LIMIT

RESTRICTED, CLASSICAL = "restricted", "classical"


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def default_box(S: AffineSemigroup) -> IntVec:
    """Four times the largest generator coordinate, per coordinate."""
    return tuple(4 * max(g[k] for g in S.gens) for k in range(S.dim))


def _c_verdict(S, verdict, nmax=DEFAULT_NMAX) -> CSemVerdict:
    return verdict if verdict is not None else decide_c_semigroup(S, nmax)


# -- Apéry sets ---------------------------------------------------------------

@dataclass(frozen=True)
class AperySet:
    base: IntVec
    variant: str
    elements: tuple[IntVec, ...]
    complete: bool
    search_box: Optional[IntVec] = None


def _classical_apery(S: AffineSemigroup, b: IntVec, box: IntVec) -> tuple[list[IntVec], bool]:
    """Breadth-first walk from 0 adding generators while staying in Ap(S, b).

    Ap(S, b) is closed under taking ⪯_S-predecessors, so every element is
    reached through a chain of elements of Ap(S, b). Returns the elements
    inside ``box`` and whether nothing was cut off by the box.
    """
    zero = (0,) * S.dim
    seen = {zero}
    queue = deque([zero])
    complete = True
    while queue:
        a = queue.popleft()
        for g in S.gens:
            c = _add(a, g)
            if c in seen:
                continue
            if _sub(c, b) in S:
                continue
            if any(x > m for x, m in zip(c, box)):
                complete = False
                continue
            seen.add(c)
            queue.append(c)
    return S.sorted(seen), complete


def apery(S: AffineSemigroup, b, variant: str = RESTRICTED, box=None,
          verdict: Optional[CSemVerdict] = None) -> AperySet:
    """Apéry set of S relative to ``b``.

    ``restricted``: a in S with a - b in pos(S) \\ S. On a C-semigroup this is
    read off the gap list and is complete.
    ``classical``: a in S with a - b not in S, walked within ``box``;
    ``complete`` is True exactly when the walk never left the box.
    """
    b = S._check(b)
    if not any(b) or b not in S:
        raise PreconditionError(f"{b} is not a nonzero element of S")
    if variant not in (RESTRICTED, CLASSICAL):
        raise InputError(f"unknown Apéry variant {variant!r}")
    if variant == RESTRICTED:
        v = verdict
        if v is None and box is None:
            v = decide_c_semigroup(S)
        if v is not None and v.is_yes:
            elems = S.sorted(_add(h, b) for h in v.gaps if _add(h, b) in S)
            return AperySet(b, RESTRICTED, tuple(elems), True)
    if box is None:
        box = _add(b, default_box(S))
    box = S._check(box)
    elems, complete = _classical_apery(S, b, box)
    if variant == RESTRICTED:
        elems = [a for a in elems if S.cone.contains(_sub(a, b))]
    return AperySet(b, variant, tuple(elems), complete, box)


def apery_decompose(S: AffineSemigroup, b, x) -> tuple[int, IntVec]:
    """The unique ``(k, c)`` with ``x = k·b + c`` and ``c`` in the classical Apéry set."""
    b, x = S._check(b), S._check(x)
    if not any(b) or b not in S:
        raise PreconditionError(f"{b} is not a nonzero element of S")
    if x not in S:
        raise PreconditionError(f"{x} is not an element of S")
    k = 0
    while _sub(x, tuple((k + 1) * v for v in b)) in S:
        k += 1
    return k, _sub(x, tuple(k * v for v in b))


# -- pseudo-Frobenius elements --------------------------------------------------

@dataclass(frozen=True)
class PFResult:
    elements: tuple[IntVec, ...]
    complete: bool
    method: str
    search_box: Optional[IntVec] = None


@dataclass(frozen=True)
class PFCheck:
    """Outcome of testing one candidate, with the evidence gathered."""
    is_pf: bool
    reason: str
    witnesses: tuple[tuple[int, ...], ...] = ()

    def __bool__(self):
        return self.is_pf


def is_pseudo_frobenius(S: AffineSemigroup, a) -> PFCheck:
    """a ∉ S, a ∈ pos(S), and a + g ∈ S for every generator g.

    Checking generators suffices: every nonzero element of S is a generator
    plus an element of S.
    """
    a = S._check(a)
    if a in S:
        return PFCheck(False, "member")
    if any(x < 0 for x in a) or not S.cone.contains(a):
        return PFCheck(False, "outside-cone")
    wits = []
    for g in S.gens:
        res = S.member(_add(a, g))
        if not res.member:
            return PFCheck(False, f"a+{g} not in S")
        wits.append(res.witness)
    return PFCheck(True, "ok", tuple(wits))


def pseudo_frobenius_csem(S: AffineSemigroup, verdict: Optional[CSemVerdict] = None) -> PFResult:
    v = _c_verdict(S, verdict)
    if not v.is_yes:
        raise StateError("gap filter needs a certified C-semigroup", v)
    pf = [h for h in v.gaps if all(_add(h, g) in S for g in S.gens)]
    return PFResult(tuple(S.sorted(pf)), True, "gap-filter")


def pseudo_frobenius_apery(S: AffineSemigroup, b, verdict: Optional[CSemVerdict] = None,
                           box=None) -> PFResult:
    """PF(S) as the ⪯_S-maximal elements of the restricted Apéry set, shifted by -b."""
    ap = apery(S, b, RESTRICTED, box=box, verdict=verdict)
    if not ap.complete:
        raise StateError("restricted Apéry set is not known to be complete")
    pf = [_sub(m, ap.base) for m in S.maximals(ap.elements)]
    return PFResult(tuple(S.sorted(pf)), True, "apery-maximals")


def pseudo_frobenius_bounded(S: AffineSemigroup, box=None) -> PFResult:
    """Every pseudo-Frobenius element componentwise below ``box``.

    Each listed element is exact; the list may miss elements outside the box.
    """
    box = S._check(box) if box is not None else default_box(S)
    if any(x < 0 for x in box):
        raise InputError("box must be nonnegative")
    reach = tuple(bx + max(g[k] for g in S.gens) for k, bx in enumerate(box))
    if table_size(reach) <= TABLE_LIMIT:
        S.ensure_table(reach)
    found = []
    for a in box_points(box):
        if a in S or not S.cone.contains(a):
            continue
        if all(_add(a, g) in S for g in S.gens):
            found.append(a)
    return PFResult(tuple(S.sorted(found)), False, "bounded-search", box)


# -- MPD verdict ----------------------------------------------------------------

@dataclass(frozen=True)
class MPDVerdict:
    status: str
    pf: Optional[PFResult] = None
    reason: str = ""
    certificate: Optional[CSemVerdict] = None


def is_mpd(S: AffineSemigroup, nmax: int = DEFAULT_NMAX, box=None) -> MPDVerdict:
    """Whether PF(S) is nonempty, i.e. S has maximal projective dimension.

    Yes carries PF elements (complete or from a bounded scan). No is only
    returned with a certificate that the relevant gap set has no
    pseudo-Frobenius element: either S = pos(S) ∩ Z^d, or S = G(S) ∩ pos(S)
    (then PF(S) ⊆ G(S) ∩ pos(S) \\ S is empty).
    """
    v = decide_c_semigroup(S, nmax)
    if v.is_yes:
        if not v.gaps:
            return MPDVerdict(NO, reason="no-gaps", certificate=v)
        return MPDVerdict(YES, pseudo_frobenius_csem(S, v), "c-semigroup", v)
    if v.status == NO:
        g = decide_group_gaps(S, nmax)
        if g.is_yes:
            if not g.gaps:
                return MPDVerdict(NO, reason="normal-in-group", certificate=g)
            pf = [h for h in g.gaps if is_pseudo_frobenius(S, h)]
            return MPDVerdict(YES, PFResult(tuple(S.sorted(pf)), True, "group-gap-filter"),
                              "finite-gaps-in-group", g)
    bounded = pseudo_frobenius_bounded(S, box)
    if bounded.elements:
        return MPDVerdict(YES, bounded, "bounded-search")
    return MPDVerdict(UNKNOWN, bounded, "no-element-found")


# -- syzygy degrees and the length bound -----------------------------------------

@dataclass(frozen=True)
class SyzygyWitness:
    degrees: tuple[IntVec, ...]
    generator_sum: IntVec
    checked: bool
    # nonempty proper subsets F checked, summed over all degrees
    subset_checks: int = 0


def syzygy_witness_degrees(S: AffineSemigroup, pf: PFResult | Iterable) -> SyzygyWitness:
    """Degrees ``a + Σ a_i`` for a in PF(S), each checked against the
    combinatorial criterion: b - Σ a_i ∉ S and b - Σ_{i∈F} a_i ∈ S for every
    proper subset F of the generator indices.
    """
    elements = pf.elements if isinstance(pf, PFResult) else tuple(tuple(a) for a in pf)
    if not elements:
        raise PreconditionError("no pseudo-Frobenius elements given")
    total = reduce(_add, S.gens)
    degrees = S.sorted(_add(a, total) for a in elements)
    checks = 0
    for b in degrees:
        if _sub(b, total) in S:
            raise ConsistencyError(f"{b} - Σa_i lies in S")
        if b not in S:
            raise ConsistencyError(f"{b} is not in S")
        for size in range(1, S.n):
            for F in itertools.combinations(S.gens, size):
                part = reduce(_add, F, (0,) * S.dim)
                if _sub(b, part) not in S:
                    raise ConsistencyError(f"{b} minus the sum over {F} is not in S")
                checks += 1
    return SyzygyWitness(tuple(degrees), total, True, checks)


def norm_inf(S: AffineSemigroup) -> int:
    """Maximum absolute row sum of the generator matrix."""
    return max(sum(abs(g[i]) for g in S.gens) for i in range(S.dim))


def pf_length_bound(S: AffineSemigroup) -> int:
    n, d = S.n, S.dim
    return (1 + 4 * norm_inf(S)) ** (d * (n - 1)) + n * n - 1


# -- term orders and Frobenius elements ------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    rows: tuple[tuple[Fraction, ...], ...]
    tag: str = "weight-matrix"

    def __post_init__(self):
        d = len(self.rows[0]) if self.rows else 0
        for k in range(d):
            first = next((r[k] for r in self.rows if r[k] != 0), 0)
            if first <= 0:
                raise InputError(f"column {k} of the order matrix does not start positive")
        den = reduce(lambda a, b: a * b // gcd(a, b),
                     (Fraction(x).denominator for r in self.rows for x in r), 1)
        if rank([[int(Fraction(x) * den) for x in r] for r in self.rows], d) != d:
            raise InputError("order matrix does not have full rank")

    @classmethod
    def make(cls, rows, tag="weight-matrix"):
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows), tag)

    @classmethod
    def lex(cls, d):
        return cls.make([[int(i == j) for j in range(d)] for i in range(d)], "lex")

    @classmethod
    def grlex(cls, d):
        return cls.make([[1] * d] + [[int(i == j) for j in range(d)] for i in range(d - 1)], "grlex")

    @classmethod
    def grevlex(cls, d):
        rows = [[1] * d] + [[-int(j == k) for j in range(d)] for k in range(d - 1, 0, -1)]
        return cls.make(rows, "grevlex")

    @classmethod
    def by_name(cls, name: str, d: int):
        try:
            return {"lex": cls.lex, "grlex": cls.grlex, "grevlex": cls.grevlex}[name](d)
        except KeyError:
            raise InputError(f"unknown term order {name!r}") from None

    def key(self, v):
        return tuple(dot(r, v) for r in self.rows)


def max_under_order(points: Iterable, order: TermOrder) -> IntVec:
    pts = [tuple(p) for p in points]
    if not pts:
        raise InputError("no points to compare")
    return max(pts, key=order.key)


@dataclass(frozen=True)
class FrobeniusCert:
    """``w·f > w·g`` for every other gap g, with w strictly positive.

    Then f is the maximum of the gap set under the matrix order with leading
    row w (ties elsewhere are irrelevant since f wins strictly).
    """
    f: IntVec
    w: tuple[int, ...]

    def revalidate(self, gap_list: Sequence) -> bool:
        if any(x <= 0 for x in self.w):
            return False
        wf = dot(self.w, self.f)
        return tuple(self.f) in {tuple(g) for g in gap_list} and all(
            dot(self.w, g) < wf for g in gap_list if tuple(g) != tuple(self.f))


def _strict_weight(f, others, d) -> Optional[tuple[int, ...]]:
    ones = (1,) * d
    if all(dot(ones, f) > dot(ones, g) for g in others):
        return ones
    # w = 1 + w', w' >= 0, (f - g)·w >= 1
    A, rhs = [], []
    for g in others:
        diff = _sub(f, g)
        A.append(diff)
        rhs.append(1 - sum(diff))
    sol = feasible_ge(A, rhs, d)
    if sol is None:
        return None
    w = [1 + x for x in sol]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in w), 1)
    ints = [int(x * den) for x in w]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


def frobenius_elements(S: AffineSemigroup, verdict: Optional[CSemVerdict] = None
                       ) -> list[FrobeniusCert]:
    """Every gap that is the maximum of H(S) for some term order, with a weight certificate."""
    v = _c_verdict(S, verdict)
    if not v.is_yes:
        raise StateError("Frobenius elements need a certified C-semigroup", v)
    gap_list = list(v.gaps)
    # a gap strictly below another componentwise loses under every term order
    candidates = [f for f in gap_list
                  if not any(g != f and all(a <= b for a, b in zip(f, g)) for g in gap_list)]
    out = []
    for f in candidates:
        # beating the other maximal gaps suffices: w > 0 is monotone componentwise
        others = [g for g in candidates if g != f]
        w = _strict_weight(f, others, S.dim)
        if w is not None:
            cert = FrobeniusCert(f, w)
            if not cert.revalidate(gap_list):
                raise ConsistencyError(f"weight {w} does not certify {f}")
            out.append(cert)
    return out


def selmer_check(S: AffineSemigroup, cert: FrobeniusCert,
                 verdict: Optional[CSemVerdict] = None) -> bool:
    """f + b is the w-largest element of the restricted Apéry set of every generator b."""
    if len(cert.w) != S.dim or any(x <= 0 for x in cert.w):
        raise InputError(f"certificate weight {cert.w} is not strictly positive")
    v = _c_verdict(S, verdict)
    for b in S.gens:
        ap = apery(S, b, RESTRICTED, verdict=v)
        top = _add(cert.f, b)
        if top not in ap.elements:
            return False
        if any(dot(cert.w, a) > dot(cert.w, top) for a in ap.elements):
            return False
    return True


def is_frobenius_vector_boxed(S: AffineSemigroup, f, box) -> bool:
    """Bounded check that f + (relint(pos S) ∩ G(S)) ⊆ S, over points p <= box.

    A True answer only covers the box.
    """
    f, box = S._check(f), S._check(box)
    if lattice_member(S.group, f) is None or f in S:
        return False
    reach = tuple(max(0, a) + b for a, b in zip(f, box))
    if table_size(reach) <= TABLE_LIMIT:
        S.ensure_table(reach)
    for p in box_points(box):
        if S.cone.relint_contains(p) and lattice_member(S.group, p) is not None:
            if _add(f, p) not in S:
                return False
    return True
