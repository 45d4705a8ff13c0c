"""Structural properties of simple games from their minimal winning coalitions."""
from .core import (
    ORACLE_LIMIT,
    Coalition,
    GameStats,
    GroundSetTooLarge,
    Hypergraph,
    NotAntichain,
    SimpleGame,
    brute_transversal_kernel,
    coalition,
    complement_family,
    is_antichain,
    minimal_edges,
    minimize,
    oracle_properties,
    players,
    responds,
    row,
    transversal,
    transversal_kernel,
)
from .duality import (
    DualityVerdict,
    coherence_witness,
    completeness_witness,
    game_is_decisive,
    game_is_proper,
    game_is_strong,
    is_coherent,
    is_complete,
    is_dual_pair,
    strongness_witness,
)
from .regular import (
    NotRegular,
    PlayerOrdering,
    RegularKernel,
    find_regular_order,
    is_linear,
    is_regular,
    regular_is_decisive,
    regular_is_proper,
    regular_is_strong,
    regular_transversal_kernel,
    regularity_violation,
    shift_is_coherent,
    shift_is_complete_oracle,
    shift_kernel_to_kernel,
    shift_leq,
    shift_minimize,
    shift_responds,
    shift_transversal_kernel_oracle,
)
from .weighted import (
    DimensionMismatch,
    MajorityVerdict,
    NonWeightedCertificate,
    NotWeighted,
    ThresholdCriterion,
    check_criterion,
    is_homogeneous,
    is_majority,
    is_weighted,
    power_of_two_strongness,
    search_nonweighted_certificate,
    verify_nonweighted_certificate,
)
from .reduction import EmbeddedPair, embed_T, gadget, reduce_game, reduce_pair, unembed_T
from .gamefile import ParseError, parse, serialize
from .families import UnknownFamily, family
from .census import census, enumerate_kernels, regular_decisive_census
from .report import Report, analyze, dualize

__version__ = "0.1.0"
