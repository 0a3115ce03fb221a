"""Exact arithmetic and verification suite for Ariki-Koike algebras.

The package computes, over the rationals or a prime field, the normal-form
and cellular bases of the Ariki-Koike algebra H_{q,Q}(n), its Specht modules
with their bilinear forms and decomposition numbers at desk scale, and
mechanically verifies the identities behind the Morita equivalence that
splits the algebra along a q-orbit separation of its cyclotomic parameters,
together with the matching counts for cyclotomic q-Schur algebras.
"""

from .fields import (
    ComputationError,
    FpElement,
    GateError,
    Params,
    PrimeField,
    Rationals,
    SizeGuardError,
    f_partition_value,
    f_s_value,
    parse_field,
    parse_params_file,
    poincare,
)
from .perms import Permutation, coset_reps, identity, s_interval, w_ab
from .tableaux import (
    MultiComposition,
    MultiPartition,
    SemistandardTableau,
    StandardTableau,
    bar,
    content,
    d_of,
    dominates,
    lambda_sets,
    mu_map,
    multicompositions,
    multipartitions,
    omega,
    omega_b,
    pair_join,
    pair_split,
    residue,
    semistandard,
    std_filtered,
    std_tableaux,
    t_row,
    tableau_dominates,
)
from .algebra import ArikiKoikeAlgebra, Element, TransitionMatrix

__all__ = [
    "ArikiKoikeAlgebra",
    "ComputationError",
    "Element",
    "FpElement",
    "GateError",
    "MultiComposition",
    "MultiPartition",
    "Params",
    "Permutation",
    "PrimeField",
    "Rationals",
    "SemistandardTableau",
    "SizeGuardError",
    "StandardTableau",
    "TransitionMatrix",
    "bar",
    "content",
    "coset_reps",
    "d_of",
    "dominates",
    "f_partition_value",
    "f_s_value",
    "identity",
    "lambda_sets",
    "mu_map",
    "multicompositions",
    "multipartitions",
    "omega",
    "omega_b",
    "pair_join",
    "pair_split",
    "parse_field",
    "parse_params_file",
    "poincare",
    "residue",
    "s_interval",
    "semistandard",
    "std_filtered",
    "std_tableaux",
    "t_row",
    "tableau_dominates",
    "w_ab",
]
