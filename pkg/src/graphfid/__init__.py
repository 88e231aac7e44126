"""Single-setting fidelity estimation for graph states under Pauli noise."""

from graphfid.analytic import (
    FidelityBreakdown,
    cluster_third_order,
    coefficient_C,
    exact_fidelity,
    f_est_interpolated,
    fidelity_breakdown,
    fidelity_error_series,
    fully_connected_fidelity,
    fully_connected_gap_bound,
    stabilizer_expectation,
    theorem1_p0,
    theorem1_quantities,
    union_bound_fidelity,
)
from graphfid.errors import (
    CapacityError,
    ConsistencyError,
    GraphFidError,
    GraphParseError,
    InvalidParameterError,
    InvalidSizeError,
    NoPatternError,
    TheoremDomainError,
)
from graphfid.graph import (
    Graph,
    GridSpec,
    Numbering,
    complete_graph,
    format_graph,
    grid_cluster,
    isolated_vertices,
    parse_graph,
)
from graphfid.noise import PauliChannel, depolarizing, interpolated, parse_channel, phase_flip
from graphfid.pauli import (
    Membership,
    PauliCounts,
    PauliString,
    StabilizerIndex,
    counts,
    generator,
    group_iter,
    membership,
    stabilizer,
    weight,
)
from graphfid.protocol import ProtocolReport, coverage_trials, hoeffding_samples, run_protocol
from graphfid.selector import (
    SelectionResult,
    auto_select,
    cluster_tiling_pattern,
    dual_condition_filter,
    find_set_A,
    fully_connected_pattern,
)

__version__ = "0.1.0"
