"""lcsgap: reduction workbench from densest-k-subgraph to multi-string LCS.

Builds gap instances (graph -> vertex-alphabet strings -> block strings
over a small alphabet with certified low pairwise LCS), solves them with
exact and heuristic engines, and runs the soundness-side extraction that
recovers a dense subgraph from any long common subsequence.
"""

from .errors import (
    BudgetError,
    CertificationError,
    DegenerateGraphError,
    FormatError,
    LcsGapError,
    ParameterError,
    StructureError,
    WitnessError,
)
from .families import (
    StringFamily,
    SyncStringReport,
    alternate_blocks,
    greedy_family,
    random_family,
    verify_sync_string,
)
from .graph import (
    DksVerdict,
    Graph,
    dense_subgraph_peel,
    density,
    dks_brute_force,
    erdos_renyi,
    plant_clique,
    subset_density,
)
from .lcs import (
    Alignment,
    MultiLcsResult,
    Solver,
    embed,
    heuristic_multi_lcs,
    is_common_subsequence,
    lcs_len,
    lcs_pair,
    multi_lcs_once_per_symbol,
    multi_lcs_product_dp,
    multi_lcs_subset_enum,
    single_symbol_approx,
)
from .reduction import (
    BlockInstance,
    ReductionParams,
    SymbolicInstance,
    alphabet_reduce,
    clique_to_witness,
    expand_witness,
    jiang_li,
    make_params,
    witness_to_clique_check,
)
from .soundness import (
    BlockDecomposition,
    ExtractionReport,
    IntervalCount,
    check_dense_case_bounds,
    decompose,
    extract_dense_subgraph,
    prune_sparse,
)

__version__ = "0.1.0"
