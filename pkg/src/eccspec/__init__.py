"""Eccentricity matrices of graphs: construction, spectra, and checks of
their spectral-radius bounds, determinants and energies."""

from .eccmatrix import (
    EpsilonProfile,
    IntMatrix,
    distance_matrix,
    eccentricity_matrix,
    epsilon_profile,
    graph_matrices,
    is_diametrical,
    is_epsilon_regular,
)
from .generators import (
    FamilySpec,
    all_connected_graphs,
    all_trees,
    canonical_form,
    make_family,
    random_connected_graph,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    Metric,
    bfs_distances,
    is_connected,
    metric,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .spectra import (
    CharPoly,
    Spectrum,
    char_poly_exact,
    determinant_exact,
    eigenvalues_sym,
    energy,
    interlacing_check,
    is_cospectral,
    quotient_bound,
    spectral_radius,
)

__version__ = "0.1.0"
