"""
Block transposition distances on the symmetric group.

A block transposition cuts a word at positions i < j < k and swaps the two
inner blocks.  This package computes exact distances and diameters at small
sizes, manipulates toric (circular shift) equivalence, locates moves that
create two bonds at once, builds three-bond witnesses for bondless inputs,
and produces sorting words whose length is certified against the
floor((2n - 2) / 3) upper bound.
"""

from .distance import (
    DistanceTable,
    SortingWord,
    distance_distribution,
    distance_table,
    eriksson_upper_bound,
    exact_diameter,
    exact_distance,
    lower_bound_diameter,
    pair_distance,
    rank_permutation,
    read_table_cache,
    sort_permutation,
    unrank_permutation,
    verify_word,
    write_table_cache,
)
from .errors import (
    BtdistError,
    CapabilityError,
    ContractError,
    InputError,
    OracleRefutationError,
    PreconditionError,
    VerificationError,
)
from .moves import (
    CollapseMap,
    MoveSuggestion,
    Placement,
    Witness,
    collapse_bonds,
    evaluate_witness,
    expand_word,
    find_2move_left,
    find_2move_right,
    is_reducible,
    three_bond_witness,
    witness_oracle,
)
from .perm_core import (
    BondCount,
    CutPoints,
    ExtendedPermutation,
    Permutation,
    apply_block_move,
    apply_block_move_extended,
    block_transposition,
    circular_bonds,
    compose,
    compose_extended,
    enumerate_block_transpositions,
    extend,
    extended_block_transposition,
    format_permutation,
    identity_permutation,
    inverse,
    invert_cut_points,
    linear_bonds,
    parse_permutation,
    restrict,
    reverse_permutation,
)
from .toric import (
    ShiftResult,
    ToricWitness,
    Word,
    alpha_power,
    are_torically_equivalent,
    circular_class,
    lift_word,
    linearize,
    shift_block_transposition,
    toric_class_linearized,
    toric_map,
    value_shift,
)

__version__ = "0.1.0"

__all__ = [
    "BondCount",
    "BtdistError",
    "CapabilityError",
    "CollapseMap",
    "ContractError",
    "CutPoints",
    "DistanceTable",
    "ExtendedPermutation",
    "InputError",
    "MoveSuggestion",
    "OracleRefutationError",
    "Permutation",
    "Placement",
    "PreconditionError",
    "ShiftResult",
    "SortingWord",
    "ToricWitness",
    "VerificationError",
    "Witness",
    "Word",
    "alpha_power",
    "apply_block_move",
    "apply_block_move_extended",
    "are_torically_equivalent",
    "block_transposition",
    "circular_bonds",
    "circular_class",
    "collapse_bonds",
    "compose",
    "compose_extended",
    "distance_distribution",
    "distance_table",
    "enumerate_block_transpositions",
    "eriksson_upper_bound",
    "evaluate_witness",
    "exact_diameter",
    "exact_distance",
    "expand_word",
    "extend",
    "extended_block_transposition",
    "find_2move_left",
    "find_2move_right",
    "format_permutation",
    "identity_permutation",
    "inverse",
    "invert_cut_points",
    "is_reducible",
    "lift_word",
    "linear_bonds",
    "linearize",
    "lower_bound_diameter",
    "pair_distance",
    "parse_permutation",
    "rank_permutation",
    "read_table_cache",
    "restrict",
    "reverse_permutation",
    "shift_block_transposition",
    "sort_permutation",
    "three_bond_witness",
    "toric_class_linearized",
    "toric_map",
    "unrank_permutation",
    "value_shift",
    "verify_word",
    "witness_oracle",
    "write_table_cache",
]
