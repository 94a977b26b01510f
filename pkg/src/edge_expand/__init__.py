"""Edge connectivity of simple graphs with certified expansion checks."""

__version__ = "0.1.0"

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .graph import (
    INF,
    Cut,
    Graph,
    VertexSet,
    bracket,
    degree,
    distance,
    distance_to_set,
    edge_cut,
    induced_subgraph,
    neighborhood,
    new_graph,
)
from .connectivity import (
    ConnectivityResult,
    FlowResult,
    brute_force_edge_connectivity,
    edge_connectivity,
    enumerate_cuts,
    global_min_cut,
    local_edge_connectivity,
)
from .expansion import (
    Certificate,
    ContractedMetric,
    ExpansionProfile,
    Partition,
    TheoremReport,
    boundary,
    certify,
    contracted_distance,
    contracted_metric,
    expansion_profile,
    interior,
    make_partition,
    phi,
    verify_theorem,
)
from .generators import (
    FIGURE_TARGETS,
    FoundInstance,
    GadgetSpec,
    NotFound,
    TargetStats,
    build_gadget,
    instance_search,
    random_expansion_instance,
    random_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
