import logging

from .config import RunConfig, apply_verbosity, config
from .core.errors import (
    CapacityError,
    DomainError,
    HypermatchError,
    NonConvergenceError,
    ParseError,
    PositivityError,
    StateError,
    StructuralError,
)
from .core.hypergraph import (
    EdgeSublist,
    HypergraphKind,
    HypergraphSpec,
    degrees,
    edge_index,
    enumerate_edges,
    from_edges,
    incident_edges,
    index_edge,
    induced,
    validate_edge,
    vertex_part,
)
from .core.weights import (
    WeightVector,
    apply_scaling,
    parity_weight,
    to_matrix,
    two_odd_cliques_weight,
    uniform_stochastic_weight,
    weights_from_matrix,
    weights_from_symmetric,
)
from .core.exact import (
    MatchingCountTable,
    PartitionValue,
    count_matchings_by_size,
    hafnian_exact,
    max_matching,
    max_matching_size,
    partition_function_dp_partite,
    partition_function_exact,
    permanent_ryser,
)
from .core.scaling import (
    ScalingOutcome,
    StochasticPoint,
    balance_ratio,
    dual_certificate_check,
    is_k_stochastic,
    marginals,
    relative_entropy,
    scale_to_k_stochastic,
)
from .core.bounds import (
    EstimateInterval,
    SandwichConstants,
    gate_alpha,
    interval_from_scaling,
    interval_stochastic,
    log_phi,
    near_stochastic_zeta_bound,
    phi_exact,
    regular_matching_lower_bound,
    sandwich_constants,
    simple_gamma,
)
from .core.tester import (
    Branch,
    TestReport,
    Verdict,
    build_test_weight,
    small_m_gate,
    test_hypergraph,
)
from .utils.instance_io import parse_instance, serialize_instance
from .utils.generators import gen_balanced, gen_near_stochastic, gen_sublist

__version__ = "0.1.0"

__all__ = [
    # Errors
    "HypermatchError",
    "StructuralError",
    "DomainError",
    "PositivityError",
    "ParseError",
    "StateError",
    "CapacityError",
    "NonConvergenceError",
    # Hypergraphs
    "HypergraphKind",
    "HypergraphSpec",
    "EdgeSublist",
    "enumerate_edges",
    "edge_index",
    "index_edge",
    "validate_edge",
    "vertex_part",
    "incident_edges",
    "induced",
    "from_edges",
    "degrees",
    # Weights
    "WeightVector",
    "apply_scaling",
    "uniform_stochastic_weight",
    "weights_from_matrix",
    "weights_from_symmetric",
    "to_matrix",
    "two_odd_cliques_weight",
    "parity_weight",
    # Exact evaluation
    "PartitionValue",
    "MatchingCountTable",
    "partition_function_exact",
    "partition_function_dp_partite",
    "permanent_ryser",
    "hafnian_exact",
    "count_matchings_by_size",
    "max_matching",
    "max_matching_size",
    # Scaling
    "ScalingOutcome",
    "StochasticPoint",
    "marginals",
    "balance_ratio",
    "is_k_stochastic",
    "scale_to_k_stochastic",
    "relative_entropy",
    "dual_certificate_check",
    # Bounds
    "SandwichConstants",
    "EstimateInterval",
    "phi_exact",
    "log_phi",
    "gate_alpha",
    "sandwich_constants",
    "interval_stochastic",
    "interval_from_scaling",
    "simple_gamma",
    "regular_matching_lower_bound",
    "near_stochastic_zeta_bound",
    # Tester
    "Verdict",
    "Branch",
    "TestReport",
    "build_test_weight",
    "small_m_gate",
    "test_hypergraph",
    # Instances
    "parse_instance",
    "serialize_instance",
    "gen_balanced",
    "gen_near_stochastic",
    "gen_sublist",
    # Convenience functions
    "RunConfig",
    "get_config",
    "set_config",
]

logging.getLogger(__name__).addHandler(logging.NullHandler())


def get_config():
    """Get current configuration."""
    return config.to_dict()


def set_config(**kwargs):
    """Update configuration."""
    config.update(**kwargs)
    apply_verbosity(config.verbose)
    logging.getLogger(__name__).debug("configuration updated: %s", kwargs)
