from app.weights.weight import (
    SignedPermutation,
    Weight,
    is_regular,
    parse_weight,
    rho,
    simple_reflection,
    weyl_group,
    word_length,
)
from app.weights.bbw import BBWResult, bbw, coset_representatives, kostant, kostant_table
from app.weights.representation import DecompositionTable, decompose_power, tensor_standard, weyl_dim
from app.weights.vanishing import (
    fakhruddin_grid,
    fakhruddin_r,
    first_nonvanishing,
    first_nonvanishing_table,
    is_pure,
    leray_pieces,
    vanishes,
)

__all__ = [
    "SignedPermutation", "Weight", "is_regular", "parse_weight", "rho", "simple_reflection",
    "weyl_group", "word_length", "BBWResult", "bbw", "coset_representatives", "kostant",
    "kostant_table", "DecompositionTable", "decompose_power", "tensor_standard", "weyl_dim",
    "fakhruddin_grid", "fakhruddin_r", "first_nonvanishing", "first_nonvanishing_table",
    "is_pure", "leray_pieces", "vanishes",
]
