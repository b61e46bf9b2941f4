"""Graph-state construction and k-uniformity certification."""

from .circuit import Circuit, Gate, emit_circuit, render
from .dense import (
    DenseState,
    ReducedDensityMatrix,
    bloch_expansion,
    build_state,
    cut_rank_entropy,
    is_maximally_mixed,
    reduced_density_matrix,
    verify_uniformity_cutrank,
    verify_uniformity_dense,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    GraphError,
    GraphFormatError,
    KUniformError,
    PauliParseError,
)
from .families import FamilySpec, bilayer, complete, cycle, generate_family, matching, torus
from .graph import Graph, adjacency_display, load_graph, save_graph
from .pauli import PauliWord, multiply
from .uniformity import (
    ProductWeightTable,
    UniformityReport,
    breaking_witness,
    certify_uniformity,
    min_weight_products,
    subset_product,
)

__version__ = "0.1.0"
