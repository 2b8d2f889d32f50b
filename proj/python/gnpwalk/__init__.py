"""Random-walk hitting-time statistics on Erdos-Renyi graphs.

Thin wrapper around the compiled extension; all computation lives in C++.
"""

from ._core import (  # noqa: F401
    AdjacencySpectrum,
    Bounds,
    CommutePairStats,
    ConvergenceError,
    CRangeError,
    DegenerateScalingError,
    DegreeConcentrationResult,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeConcentrationResult,
    EmptyGraphError,
    Error,
    GapTrendResult,
    GapZeroDivergenceError,
    Graph,
    IsolatedVertexError,
    Lambda2Relation,
    NumericalError,
    ParseError,
    PRule,
    RangeError,
    SameVertexError,
    SelfLoopError,
    SingularSystemError,
    SpectralDecomposition,
    SpectralIdentities,
    SweepPlan,
    SweepRecord,
    WalkEstimate,
    __version__,
    adjacency_spectrum,
    build_normalized_adjacency,
    check_spectral_identities,
    commute_pair_stats,
    commute_time,
    commute_time_bounds,
    default_max_steps,
    degree_concentration_check,
    edge_concentration_check,
    eigendecompose,
    gap_trend_check,
    hitting_time_spectral,
    hitting_times_linear,
    is_connected,
    lambda2_relation,
    perron_vector_check,
    random_start_time,
    random_target_time,
    random_target_time_oracle,
    random_target_times,
    ratio_check,
    read_edge_list,
    read_edge_list_file,
    remainder_norm,
    run_sweep,
    sample_gnp,
    simulate_walk,
    spectral_gap,
    stationary_distribution,
    sweep_csv,
    target_time_bounds,
    write_edge_list,
)
