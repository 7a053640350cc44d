"""Golay code, M24, the code module over F_2, and the Leech lattice."""

from .gf2 import (
    BitMatrix,
    alt_power,
    filtration_dims,
    fixed_space,
    kernel,
    rank,
    sq1_exactness,
    sq1_matrix,
    sym_power,
)
from .golay import (
    ALL_ONES,
    M24_ORDER,
    BinaryCode,
    build_golay,
    c12_matrices,
    codeword_trace,
    dual_fixed_space,
    identify_basis,
    m24_chain,
    m24_cycle_type,
    m24_generators,
    matrix_group_order,
    preserves_code,
    triple_intersection_check,
)
from .leech import (
    LatticeBasis,
    SignedPermutation,
    leech_basis,
    preserves_lattice,
    random_element,
    signed_cycle_frame,
    signed_perm_matrix,
)
from .permgroup import perm_ops, schreier_sims

__all__ = [
    "ALL_ONES",
    "M24_ORDER",
    "BinaryCode",
    "BitMatrix",
    "LatticeBasis",
    "SignedPermutation",
    "alt_power",
    "build_golay",
    "c12_matrices",
    "codeword_trace",
    "dual_fixed_space",
    "filtration_dims",
    "fixed_space",
    "sq1_exactness",
    "identify_basis",
    "kernel",
    "leech_basis",
    "m24_chain",
    "m24_cycle_type",
    "m24_generators",
    "matrix_group_order",
    "perm_ops",
    "preserves_code",
    "preserves_lattice",
    "random_element",
    "rank",
    "schreier_sims",
    "signed_cycle_frame",
    "signed_perm_matrix",
    "sq1_matrix",
    "sym_power",
    "triple_intersection_check",
]
