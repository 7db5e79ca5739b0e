"""Special-gap adjunction and C-irreducibility verdicts.

Only C-irreducibility (no decomposition into two larger finitely generated
monoids with the same cone) is ever certified positively. Whether that
implies irreducibility among all submonoids is left open.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import ConsistencyError, PreconditionError
from ..frobenius import default_box, frobenius_elements, is_pseudo_frobenius, pseudo_frobenius_csem
from ..gaps import DEFAULT_NMAX, UNKNOWN, decide_c_semigroup
from ..linalg import IntVec
from ..semigroup import AffineSemigroup, box_points

C_IRREDUCIBLE, NOT_IRREDUCIBLE = "c-irreducible", "not-irreducible"


def _double(a):
    return tuple(2 * x for x in a)


def adjoin_special_gap(S: AffineSemigroup, a) -> AffineSemigroup:
    """``S ∪ {a}`` for a pseudo-Frobenius a with 2a in S; it is generated by gens + [a]."""
    a = S._check(a)
    if not is_pseudo_frobenius(S, a):
        raise PreconditionError(f"{a} is not a pseudo-Frobenius element")
    if _double(a) not in S:
        raise PreconditionError(f"2·{a} is not in S")
    return AffineSemigroup(list(S.gens) + [a], S.dim)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str
    pf: tuple[IntVec, ...] = ()
    frobenius: tuple[IntVec, ...] = ()
    shape: str = ""
    # for NOT_IRREDUCIBLE: the two adjoined elements; S = (S ∪ {a1}) ∩ (S ∪ {a2})
    witnesses: tuple[IntVec, ...] = ()
    verification_box: Optional[IntVec] = None


def verify_split(S: AffineSemigroup, a1, a2, box) -> bool:
    """Membership in (S ∪ {a1}) ∩ (S ∪ {a2}) equals membership in S on the box."""
    S1, S2 = adjoin_special_gap(S, a1), adjoin_special_gap(S, a2)
    for T in (S, S1, S2):
        T.ensure_table(box)
    return all(((p in S1) and (p in S2)) == (p in S) for p in box_points(box))


def irreducibility_verdict(S: AffineSemigroup, nmax: int = DEFAULT_NMAX,
                           box=None) -> IrreducibilityVerdict:
    v = decide_c_semigroup(S, nmax)
    if not v.is_yes:
        return IrreducibilityVerdict(UNKNOWN, shape="not-certified-c-semigroup")
    if not v.gaps:
        # every monoid with the same cone lies inside pos(S) ∩ N^d = S
        return IrreducibilityVerdict(C_IRREDUCIBLE, shape="no-gaps")
    pf = pseudo_frobenius_csem(S, v).elements
    frob = tuple(c.f for c in frobenius_elements(S, v))
    if len(pf) == 1:
        return IrreducibilityVerdict(C_IRREDUCIBLE, pf, frob, "{f}")
    if len(pf) == 2 and len(frob) == 1:
        f = frob[0]
        half = next(p for p in pf if p != f)
        if _double(half) == f:
            return IrreducibilityVerdict(C_IRREDUCIBLE, pf, frob, "{f, f/2}")
    pair = None
    if len(frob) >= 2:
        pair, shape = frob[:2], "two-frobenius"
    else:
        doubling = [a for a in pf if _double(a) in S]
        if len(doubling) >= 2:
            pair, shape = tuple(doubling[:2]), "two-doubling-pf"
    if pair is None:
        return IrreducibilityVerdict(UNKNOWN, pf, frob, "undecided")
    vbox = box if box is not None else tuple(
        max(b, 2 * max(p[k] for p in pf)) for k, b in enumerate(default_box(S)))
    if not verify_split(S, pair[0], pair[1], vbox):
        raise ConsistencyError(f"{pair} does not split S")
    return IrreducibilityVerdict(NOT_IRREDUCIBLE, pf, frob, shape, pair, vbox)
