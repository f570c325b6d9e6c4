"""Exact Fock-space combinatorics for unipotent blocks of GL(n, q).

Partitions with their e-cores and quotients, Laurent polynomials over Z,
Schur-function kernels, ribbon-strip operators on the level-one Fock space,
Lusztig induction on character labels, and the canonical bases whose
specializations at v = 1 give decomposition matrices and their inverses.
"""

from .canonical import (
    bar,
    bar_matrix,
    brauer_as_lusztig,
    canonical_minus,
    canonical_minus_all,
    canonical_plus,
    canonical_plus_all,
    decomposition_matrix,
    inverse_decomposition_matrix,
    steinberg_factor,
)
from .exact_ring import LaurentPoly
from .fock import (
    FockVector,
    SpinConvention,
    apply_f,
    apply_f_divided,
    apply_heisenberg_b,
    apply_heisenberg_b_adjoint,
    apply_S,
    apply_V,
    horizontal_strips,
)
from .lusztig import CharacterVector, farahat_restrict, levi_spec, lusztig_L
from .matrices import TransitionMatrix
from .partitions import (
    ChargeVector,
    Partition,
    QuotientTuple,
    charge_to_core,
    core_and_quotient,
    core_to_charge,
    decompose_singular,
    from_core_and_quotient,
    partitions_of,
)
from .symfunc import inverse_kostka, kostka_matrix, lr_coefficient, plethysm_pe_schur, psi_e

__version__ = "0.1.0"

__all__ = [
    "ChargeVector",
    "CharacterVector",
    "FockVector",
    "LaurentPoly",
    "Partition",
    "QuotientTuple",
    "SpinConvention",
    "TransitionMatrix",
    "apply_S",
    "apply_V",
    "apply_f",
    "apply_f_divided",
    "apply_heisenberg_b",
    "apply_heisenberg_b_adjoint",
    "bar",
    "bar_matrix",
    "brauer_as_lusztig",
    "canonical_minus",
    "canonical_minus_all",
    "canonical_plus",
    "canonical_plus_all",
    "charge_to_core",
    "core_and_quotient",
    "core_to_charge",
    "decompose_singular",
    "decomposition_matrix",
    "farahat_restrict",
    "from_core_and_quotient",
    "horizontal_strips",
    "inverse_decomposition_matrix",
    "inverse_kostka",
    "kostka_matrix",
    "levi_spec",
    "lr_coefficient",
    "lusztig_L",
    "partitions_of",
    "plethysm_pe_schur",
    "psi_e",
    "steinberg_factor",
]
