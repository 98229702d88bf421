"""Stable cyclic partitions of random roommates instances."""

from .errors import CapExceeded
from .instance import (
    LatentMatrix,
    PreferenceInstance,
    from_latent,
    generate_uniform,
    make_rng,
    rank_profile_within,
    sample_latent,
)
from .partition import (
    BlockingPair,
    Condition1Violation,
    CyclicPartition,
    ExchangeBlockingPair,
    StabilityVerdict,
    blocking_pairs,
    is_doubly_stable,
    is_exchange_stable,
    is_stable,
    max_predecessor_rank,
    odd_parties,
    rank_sum,
    reduce,
)
from .solver import (
    SolveResult,
    complete_matching_heuristic,
    is_solvable,
    max_stable_matching,
    tan_solve,
)

__version__ = "0.1.0"
