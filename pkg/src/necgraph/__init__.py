"""Strongly regular n-e.c. graphs: constructions, exact checkers and parameter bounds."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    basic_nec_cap,
    dual_design_3ec_polynomial,
    geometric_3ec_test,
    net_3ec_polynomial,
    screen,
    srg_3ec_test,
    sts_admissible,
)
from .constructions import (
    FieldSpec,
    GroupSpec,
    bose_sts,
    cayley_table,
    paley_graph,
    petersen,
    symplectic_graph,
)
from .ec import EcReport, FullnessReport, gamma, graph_catalog, is_n_ec, is_r_full, max_ec, naive_is_n_ec
from .geometry import (
    IncidenceStructure,
    LatinSquare,
    PgClass,
    PgParams,
    SteinerTripleSystem,
    classify,
    dual,
    latin_square_to_net,
    point_graph,
    sts_to_dual_geometry,
    triangle_partition_check,
    verify_partial_geometry,
)
from .graph import (
    Graph,
    GraphBuilder,
    VertexSet,
    complement,
    decode_graph6,
    encode_graph6,
    induced_subgraph,
    is_isomorphic_small,
)
from .srg import (
    SrgParams,
    check_param_identity,
    complement_params,
    complement_triangle_free_geo,
    is_2ec_srg,
    pg_point_graph_params,
    pseudo_geometric_inverse,
    srg_params,
)
