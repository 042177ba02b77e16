"""Exact hitting times, effective resistances and spanning-tree counts on wheel
graphs, with general-graph oracles to check them against."""
from .closed_form import (
    FormulaInconsistency,
    HittingQuery,
    effective_resistance,
    hitting_time,
    identified_tree_count,
    inverse_folded_matrix,
    spanning_tree_count,
)
from .sequences import check_identity, fibonacci, lucas
from .wheel_model import (
    CENTER,
    Center,
    MultiGraph,
    Peripheral,
    RationalMatrix,
    VertexId,
    WheelSpec,
    build_wheel,
    folded_matrix,
    identify_vertices,
    laplacian,
    reduced_laplacian,
)

__version__ = "0.1.0"
