"""Zero forcing, zero blocking sets, and exact blocking numbers of grid graphs."""
from .forcing import ColorState, closure, is_blocking_set, is_stalled, is_zero_forcing_set
from .graph import Graph, GraphFormatError, GridSpec, format_graph, grid_graph, parse_graph
from .solver import (
    BudgetExhausted,
    SearchBudget,
    SolveResult,
    enumerate_min_blocking_sets,
    exhaustive_blocking_number,
    failed_zero_forcing_number,
    min_blocking_grid,
    min_blocking_number,
    zero_forcing_number,
)
from .staircase import build_staircase, certify, compute_window
from .theory import (
    FormulaParams,
    UnsupportedGrid,
    Witness,
    blocking_number_formula,
    build_witness,
    gap_decompositions,
    lemma8_max_c,
    qr_params,
    upper_bound_bcc,
)

__version__ = "0.1.0"
