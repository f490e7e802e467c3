"""graphisol: exact 4-cycle isolation numbers, certified floor(n/5)
isolating sets, the extremal family attaining the bound, and exhaustive
graph6 catalog sweeps for bound violators."""

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    bits,
    closed_neighborhood,
    components,
    delete_vertices,
    encode_graph6,
    from_edges,
    induced_subgraph,
    mask_of,
    parse_edge_list,
    parse_graph6,
)
from .isomorphism import find_isomorphism, isomorphic
from .patterns import (
    AllCycles,
    C4_FAMILY,
    CYCLE4,
    Clique,
    DIAMOND,
    FamilySpec,
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G4Member,
    G9Member,
    K1,
    K2,
    K3,
    K4,
    NINE_VERTEX_EXCEPTIONS,
    P3,
    PatternList,
    SingleCycle,
    classify_exceptional,
    clique,
    contains_pattern,
    cycle,
    family_from_token,
    family_token,
    is_family_free,
    path,
)
from .isolation import (
    IsolatingCertificate,
    ReductionError,
    SearchBudgetExceeded,
    has_isolating_set_within,
    iota_exact,
    is_isolating,
    compose_isolating_set,
    reduce_pendant,
)
from .constructive import (
    ComponentwiseResult,
    ConstructiveResult,
    ConstructiveTrace,
    DisconnectedGraphError,
    ExceptionalGraphError,
    TraceStep,
    isolate_c4,
    isolate_c4_any,
    p3_or_k3_witness,
)
from .extremal import BGraphParams, build_b, verify_extremal
from .sweep import SweepFilter, SweepReport, Violation, sweep_catalog
from .catalogs import (
    generate_connected_catalog,
    iter_graph6_lines,
    packaged_catalog_path,
    read_catalog,
)

__version__ = "0.1.0"
