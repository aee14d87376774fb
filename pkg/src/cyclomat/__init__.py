"""Exact-arithmetic toolkit for symmetrizable integer matrices.

Decides symmetrizability constructively, computes integer symmetrizers and
exact surd symmetrizations, certifies eigenvalue location in [-2,2] and
(-2,2) without floating point, tests signed-permutation equivalence with
witnesses, generates the named digraph families, and re-derives the
classification of the maximal cases by exhaustive bounded search.
"""

from .matcore import (
    Digraph,
    SurdMatrix,
    connected_components,
    induced_subgraph,
    is_connected,
    is_sign_symmetric,
    is_symmetric,
    symmetric_components,
    transpose,
)
from .symmetrize import (
    CycleViolation,
    NotSymmetrizableError,
    Symmetrizer,
    balancing_holds,
    check_cycle_condition,
    compute_symmetrizer,
    is_symmetrizable,
    symmetrization,
)
from .spectra import (
    IntPolynomial,
    RootCount,
    all_eigs_in_open,
    char_poly,
    count_roots,
    eigenvalues_float,
    interlaces,
    is_cyclotomic,
    is_plus_minus_two_only,
)
from .equivalence import (
    SignedPermutation,
    apply,
    are_equivalent,
    canonical_form,
    equivalence_witness,
    equivalent_to_transpose,
    sign_switch,
    weight_modulus_sequences,
)
from .families import FamilyId, catalog, family_label, generate, generate_surd, parse_family_name

__version__ = "0.1.0"
