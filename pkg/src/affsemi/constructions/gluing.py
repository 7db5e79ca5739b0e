"""Gluing of two affine semigroups along a common element d."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError, InputError, PreconditionError
from ..frobenius import is_pseudo_frobenius
from ..linalg import IntVec, Lattice, lattice_intersect
from ..semigroup import AffineSemigroup


class GluingError(PreconditionError):
    """The data does not describe a gluing. ``reason`` is a short code."""

    def __init__(self, reason: str, message: str, evidence=None):
        super().__init__(message)
        self.reason = reason
        self.evidence = evidence


@dataclass(frozen=True)
class GluingCert:
    d_vec: IntVec
    intersection: Lattice
    d_in_S1: tuple[int, ...]
    d_in_S2: tuple[int, ...]
    glued: AffineSemigroup
    S1: AffineSemigroup
    S2: AffineSemigroup


def check_gluing(S1: AffineSemigroup, S2: AffineSemigroup, d_vec) -> GluingCert:
    """Certify that ``S1 + S2`` is the gluing of S1 and S2 by ``d_vec``.

    Both generator lists must consist of minimal generators of the union.
    They may share elements (the standard example in N^3 shares (1,1,0)).
    """
    if S1.dim != S2.dim:
        raise InputError("semigroups live in different dimensions")
    d = S1._check(d_vec)
    union = list(dict.fromkeys(S1.gens + S2.gens))
    glued = AffineSemigroup(union, S1.dim)
    minimal = set(glued.minimal_generators())
    if set(union) != minimal:
        raise GluingError("not-a-partition", "some generator is not minimal in S1 + S2",
                          sorted(set(union) - minimal))
    if set(S1.gens) <= set(S2.gens) or set(S2.gens) <= set(S1.gens):
        raise GluingError("not-a-partition", "one generator list contains the other")
    r1, r2 = S1.member(d), S2.member(d)
    if not (r1.member and r2.member):
        raise GluingError("d-not-in-both", f"{d} is not in both semigroups",
                          {"in_S1": r1.member, "in_S2": r2.member})
    inter = lattice_intersect(S1.group, S2.group)
    if inter.rank != 1:
        raise GluingError("intersection-rank", f"G(S1) ∩ G(S2) has rank {inter.rank}",
                          inter.basis)
    gen = inter.basis[0]
    if gen != d and gen != tuple(-x for x in d):
        raise GluingError("intersection-generator",
                          f"G(S1) ∩ G(S2) is generated by {gen}, not by ±{d}", gen)
    return GluingCert(d, inter, r1.witness, r2.witness, glued, S1, S2)


def pf_of_gluing(cert: GluingCert, b1, b2) -> IntVec:
    """``b1 + b2 + d``, a pseudo-Frobenius element of the glued semigroup."""
    b1, b2 = cert.S1._check(b1), cert.S2._check(b2)
    if not is_pseudo_frobenius(cert.S1, b1):
        raise PreconditionError(f"{b1} is not pseudo-Frobenius in S1")
    if not is_pseudo_frobenius(cert.S2, b2):
        raise PreconditionError(f"{b2} is not pseudo-Frobenius in S2")
    g = tuple(x + y + z for x, y, z in zip(b1, b2, cert.d_vec))
    if not is_pseudo_frobenius(cert.glued, g):
        raise ConsistencyError(f"{g} failed re-verification in the glued semigroup")
    return g
