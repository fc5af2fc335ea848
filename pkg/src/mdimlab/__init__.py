"""Exact metric, edge metric, and mixed metric dimension of graphs and
their subdivision, middle, and total derivatives."""

from .errors import (
    BadSpecError,
    ClassMismatchError,
    DisconnectedError,
    EnumerationOverflowError,
    GraphError,
    LoopEdgeError,
    NoWitnessError,
    NotABasisError,
    NotCactusError,
    ParseError,
    SearchBudgetExceededError,
    TooSmallError,
)
from .graph import (
    Graph,
    MixedElement,
    all_pairs_distances,
    build_graph,
    edge_edge_distance,
    edge_element,
    mixed_distance,
    mixed_elements,
    vertex_edge_distance,
    vertex_element,
)
from .transforms import (
    DerivedGraph,
    IdentityCheck,
    IdentityReport,
    check_distance_identities,
    line_graph,
    middle,
    subdivision,
    total,
)
from .solvers import (
    DIM,
    EDIM,
    MDIM,
    Certificate,
    PhiResult,
    forced_vertices_mdim,
    is_edge_resolving,
    is_mixed_resolving,
    is_resolving,
    phi_of_basis,
    phi_of_graph,
    phi_set,
    signature,
    solve_dimension,
)
from .structural import (
    CactusReport,
    CycleInfo,
    GnFacts,
    cactus_decompose,
    closed_form,
    gn_family_facts,
    is_geodesic_triple,
    is_tree,
    leaf_count,
)
from .families import (
    FamilySpec,
    complete_graph,
    cycle_graph,
    enumerate_small_trees,
    generate,
    gn_graph,
    path_graph,
    random_cactus,
    random_tree,
    star_graph,
)
from .formats import (
    emit_edge_list,
    emit_graph,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graphs,
)

__version__ = "0.1.0"
