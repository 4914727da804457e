"""regspectra: spectral bounds and exhaustive search for regular graphs.

The package provides dense simple graphs and the constructions built on them,
a self-contained symmetric eigensolver (compiled kernel with a pure-Python
fallback selected at import), Hoffman graphs with their special matrices and
fattenings, the quasi-clique association machinery, numeric bound
certificates, and an isomorph-free exhaustive search for the maximum order of
a connected k-regular graph with second largest eigenvalue at most a given
value.
"""

from .association import (
    CliqueFamily,
    CliquePartition,
    associate,
    equiv_nm,
    maximal_cliques,
    partition_classes,
    quasi_clique,
)
from .bounds import (
    BoundCertificate,
    KnownValue,
    Thresholds,
    amply_regular_check,
    co_edge_bound_check,
    isolated_vertex_bound_check,
    known_v,
    lower_bound_graph,
    mu_bound,
    prop13_verifier,
    ramsey_lookup,
    srg_mu_check,
    thresholds,
)
from .errors import CapExceededError, ConsistencyError, UnsupportedSizeError
from .graphs import (
    DistanceLayers,
    Graph,
    RegularityParams,
    contains_induced,
    diameter,
    distance_layers,
    regularity_params,
)
from .hoffman import (
    HoffmanGraph,
    attach_universal_fat,
    contains_hoffman_subgraph,
    fatten,
    slim_with_fats,
)
from .kernel import backend
from .search import (
    SearchReport,
    canonical_form,
    enum_connected_regular,
    spectral_prune,
    v_search,
)
from .spectra import (
    Spectrum,
    coclique_extension_spectrum,
    eig_symmetric,
    interlacing_check,
    lambda_min,
    quotient_matrix,
    second_largest,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CapExceededError",
    "CliqueFamily",
    "CliquePartition",
    "ConsistencyError",
    "DistanceLayers",
    "Graph",
    "HoffmanGraph",
    "KnownValue",
    "RegularityParams",
    "SearchReport",
    "Spectrum",
    "Thresholds",
    "UnsupportedSizeError",
    "amply_regular_check",
    "associate",
    "attach_universal_fat",
    "backend",
    "canonical_form",
    "co_edge_bound_check",
    "coclique_extension_spectrum",
    "contains_hoffman_subgraph",
    "contains_induced",
    "diameter",
    "distance_layers",
    "eig_symmetric",
    "enum_connected_regular",
    "equiv_nm",
    "fatten",
    "interlacing_check",
    "isolated_vertex_bound_check",
    "known_v",
    "lambda_min",
    "lower_bound_graph",
    "maximal_cliques",
    "mu_bound",
    "partition_classes",
    "prop13_verifier",
    "quasi_clique",
    "quotient_matrix",
    "ramsey_lookup",
    "regularity_params",
    "second_largest",
    "slim_with_fats",
    "spectral_prune",
    "spectrum",
    "srg_mu_check",
    "thresholds",
    "v_search",
    "__version__",
]
