"""Exact matrix games, patience, and explicit games of high patience."""

from ._caps import CapExceededError, default_cap
from .alonvu import (
    OracleContext,
    SubsetOrder,
    a_entry,
    b_entry,
    index_to_subset,
    materialize_alonvu,
    subset_order,
    subset_to_index,
    z_column,
)
from .families import FAMILIES, family_certificate, family_matrix, phi_transform
from .games import (
    GameSolution,
    Kernel,
    NonsingularRejection,
    check_patience_bound,
    game_value,
    min_patience,
    nonsingular_solution,
    patience,
    shapley_snow_kernels,
    solve_game,
)
from .linalg import (
    DimensionError,
    SingularMatrixError,
    adjugate,
    as_matrix,
    det,
    hadamard,
    inverse,
    inverse_with_adjugate,
    max_abs_entry,
    solve,
)
from .switching import (
    CutInstance,
    SignVectorPair,
    checkerboard_game,
    cut_local_search,
    game_to_cut,
    largest_entry_seed,
    local_search_switch,
    maxcut_to_bipartite,
)
from .transforms import TransformRejection, pair_game, wld_to_wl

__version__ = "0.1.0"
