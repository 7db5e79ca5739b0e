"""Pseudo-Frobenius elements, gaps and Apéry sets of affine semigroups in N^d."""

from .cone import Cone, cone_contains, cone_of, positive_functional, relint_contains
from .errors import ConsistencyError, InputError, PreconditionError, StateError
from .frobenius import (
    CLASSICAL, RESTRICTED, AperySet, FrobeniusCert, MPDVerdict, PFCheck, PFResult,
    SyzygyWitness, TermOrder, apery, apery_decompose, frobenius_elements,
    is_frobenius_vector_boxed, is_mpd, is_pseudo_frobenius, max_under_order, norm_inf,
    pf_length_bound, pseudo_frobenius_apery, pseudo_frobenius_bounded, pseudo_frobenius_csem,
    selmer_check, syzygy_witness_degrees,
)
from .gaps import (
    DEFAULT_NMAX, NO, UNKNOWN, YES, CSemVerdict, RayDiagnostic, decide_c_semigroup,
    decide_group_gaps, gaps, ray_diagnostics,
)
from .linalg import Lattice, hnf, kernel, lattice_index, lattice_intersect, saturation
from .semigroup import (
    AffineSemigroup, MembershipResult, enumerate_upto, group, leq_S, maximals_leq_S, member,
    minimal_generators,
)

__version__ = "0.1.0"
