"""Evidential label propagation: community detection with belief-function
node memberships, plus plain label propagation and an evidential K-NN
clustering baseline, on undirected graphs."""

from .graph import (
    Graph,
    GraphFormatError,
    from_edges,
    jaccard,
    load_edge_list,
    load_labels,
    local_density,
)
from .belief import (
    ALPHA_CAP,
    ConflictError,
    MassFunction,
    betp,
    combine_simple,
    gamma_heuristic,
    phi,
    pl,
    simple_mass,
    vacuous,
)
from .influence import (
    InfluenceTable,
    beta_order,
    build_influence_table,
    distance,
    influence,
    influence_variance,
)
from .evaluation import Partition, RunStats, benchmark, nmi, truth_partition
from .propagation import (
    ElpConfig,
    ElpResult,
    LabelState,
    NodeClass,
    classify,
    elp_run,
    evidence_weight,
    lpa_run,
    update_node,
)

__version__ = "0.1.0"
