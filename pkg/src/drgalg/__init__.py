"""Distance-regular graphs and the relation algebras they represent.

Build the catalog graphs, extract intersection arrays by brute-force
counting, evaluate the diameter-3 closed forms against those counts,
verify colored-complete-graph representations against the cycle
catalog, and decide algebraicity through automorphism orbitals.
"""

from .errors import (
    BadParameter,
    BadVertexList,
    ColorCountMismatch,
    DisconnectedGraph,
    DrgalgError,
    InconsistentTensor,
    NegativeEntry,
    NonIntegralEntry,
    NonIntegralLayer,
    ParseError,
    SizeGuard,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    diameter,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
)
from .generators import FamilySpec, generate, hoffman_singleton, second_subconstituent, sylvester
from .scheme import (
    ColoredCompleteGraph,
    IntersectionArray,
    IntersectionTensor,
    NonUniformReport,
    adjacency_coloring,
    check_khp_identity,
    count_tensor,
    distance_coloring,
    extract_array,
    format_array,
    format_coloring,
    is_distance_regular,
    layer_sizes,
    parse_array,
    parse_coloring,
)
from .diam3 import (
    CYCLE_TYPES,
    CycleTable,
    Diam3Formulas,
    closed_form_tensor,
    composition_table,
    cycle_table,
)
from .ra import (
    CATALOG,
    IdentifyResult,
    RepReport,
    check_3065_structure,
    check_3165_minimality_properties,
    identify,
    verify_representation,
)
from .symmetry import (
    OrbitalPartition,
    PermutationSet,
    automorphism_generators,
    group_order,
    is_algebraic,
    is_distance_transitive,
    orbitals,
)

__version__ = "0.1.0"
