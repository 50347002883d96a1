"""Exact Grundy domination solver for graphs and X-join products."""

from .decomposition import (
    IntractablePrimeError,
    ModuleTree,
    SolverInconsistencyError,
    decompose,
    solve,
    solve_tree,
)
from .graph import (
    Graph,
    GraphFormatError,
    StructuredKind,
    complement,
    complete_graph,
    connected_components,
    cycle_power,
    edgeless_graph,
    format_graph,
    graph_from_edges,
    independent_sets,
    induced_subgraph,
    is_independent,
    make_structured,
    parse_graph_text,
    path_power,
    read_graph_file,
)
from .mwis import MwisResult, best_pair_cycle_power, mwis_cycle_power, mwis_path_power
from .oracle import (
    FootprintCertificate,
    OracleLimitError,
    SequenceViolation,
    VertexSequence,
    gamma_gr_exact,
    gamma_gr_given_I,
    gamma_gr_rooted,
    seq,
    verify_sequence,
)
from .powers import (
    FamilyError,
    NotClosedFormError,
    XJoinSolveResult,
    build_S_C,
    build_S_P,
    gamma_given_I_cycle_power,
    gamma_given_I_path_power,
    gamma_structured,
    interval_sequence,
    lex_gamma,
    solve_xjoin_cycle_power,
    solve_xjoin_path_power,
)
from .products import (
    XJoinInstance,
    lexicographic,
    lift_sequence,
    replace_vertex_gamma,
    xjoin,
    xjoin_gamma_generic,
)
from .split import (
    SplitPartition,
    gamma_given_I_split,
    gamma_split,
    lex_gamma_split,
    solve_xjoin_split,
    split_recognize,
)

__version__ = "0.1.0"
