"""Randomized minimum-weight feedback vertex set and loop cutset solvers."""

__version__ = "0.1.0"

from .graph import (
    UNSELECTABLE,
    PartitionStats,
    WeightedMultigraph,
    degree,
    is_fvs,
    partition_stats,
)
from .reduction import is_branchy, is_rich, reduce_to_branchy, reduce_to_rich
from .randomized import (
    AlgorithmParams,
    CutsetResult,
    InfeasibleError,
    degree_probabilities,
    pick_degree_over_weight,
    pick_degree_proportional,
    ratio_probabilities,
    repeated_guess,
    repeated_wguess_i,
    single_guess,
    single_wguess_i,
    single_wguess_ii,
    stream,
    wra,
)
from .bayes import BayesianDag, SplitGraph, loop_cutset, psi, split_graph, validate_loop_cutset
from .baselines import OracleResult, brute_force_min_wfvs, greedy_wfvs
from .formats import FormatError, read_bn, read_wgr, write_bn, write_wgr
from .bench import (
    AlgoSpec,
    ComparisonRow,
    ExperimentConfig,
    emit_table,
    gen_random_dag,
    run_suite,
)
