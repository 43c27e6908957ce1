"""Edge weights on complete hypergraphs and the standard constructions on them."""

import math
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, StructuralError
from .hypergraph import (
    Edge,
    EdgeSublist,
    HypergraphKind,
    HypergraphSpec,
    edge_array,
    edge_index,
    enumerate_edges,
)


class WeightVector:
    """Edge-indexed nonnegative weights W = {w_S} on a complete hypergraph."""

    def __init__(self, spec: HypergraphSpec, values: Iterable[float]):
        """Validate and freeze the weight values."""
        array = np.array(values, dtype=float).reshape(-1)
        if array.shape[0] != spec.edge_count:
            raise StructuralError(
                f"Weight has {array.shape[0]} entries, {spec} has {spec.edge_count} edges"
            )
        if not np.all(np.isfinite(array)):
            raise DomainError("Weights must be finite")
        if np.any(array < 0):
            raise DomainError("Weights must be nonnegative")
        array.flags.writeable = False
        self.spec = spec
        self.values = array

    @classmethod
    def constant(cls, spec: HypergraphSpec, value: float) -> "WeightVector":
        return cls(spec, np.full(spec.edge_count, float(value)))

    @classmethod
    def from_function(
        cls, spec: HypergraphSpec, func: Callable[[Edge], float]
    ) -> "WeightVector":
        """Weight with w_S = func(S) for every edge S."""
        return cls(spec, [func(edge) for edge in enumerate_edges(spec)])

    @classmethod
    def from_log(cls, spec: HypergraphSpec, log_values: Iterable[float]) -> "WeightVector":
        return cls(spec, np.exp(np.asarray(log_values, dtype=float)))

    @property
    def log_values(self) -> np.ndarray:
        """Natural logs of the weights, -inf where a weight is zero."""
        with np.errstate(divide="ignore"):
            return np.log(self.values)

    @property
    def positive(self) -> bool:
        return bool(self.values.min() > 0)

    @property
    def total(self) -> float:
        return math.fsum(self.values)

    def support(self) -> np.ndarray:
        """Indices of the edges with positive weight."""
        return np.flatnonzero(self.values > 0)

    def __getitem__(self, edge) -> float:
        if isinstance(edge, (int, np.integer)):
            return float(self.values[edge])
        return float(self.values[edge_index(self.spec, edge)])

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"WeightVector({self.spec}, total={self.total:.6g})"


def apply_scaling(weights: WeightVector, scale: Iterable[float]) -> WeightVector:
    """Scaled weight z_S = (prod_{v in S} lambda_v) w_S."""
    factors = np.asarray(scale, dtype=float)
    if factors.shape != (weights.spec.n,):
        raise StructuralError(
            f"Expected {weights.spec.n} scaling factors, got {factors.shape[0]}"
        )
    if np.any(factors <= 0):
        raise DomainError("Scaling factors must be positive")
    edges = edge_array(weights.spec)
    log_z = weights.log_values + np.log(factors)[edges].sum(axis=1)
    return WeightVector(weights.spec, np.exp(log_z))


def uniform_stochastic_weight(spec: HypergraphSpec) -> WeightVector:
    """The constant k-stochastic weight on a complete hypergraph."""
    return WeightVector.constant(spec, 1.0 / spec.degree)


def sublist_indicator(sub: EdgeSublist, inside: float = 1.0, outside: float = 0.0):
    """Weight equal to inside on member edges and outside elsewhere."""
    values = np.full(sub.base.edge_count, float(outside))
    if sub.members:
        values[sorted(sub.members)] = float(inside)
    return WeightVector(sub.base, values)


def weights_from_matrix(matrix) -> WeightVector:
    """k=2 partite weight of an m x m matrix: b_ij sits on edge {i, m+j}."""
    b = np.asarray(matrix, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 1:
        raise StructuralError(f"Expected a nonempty square matrix, got shape {b.shape}")
    spec = HypergraphSpec(HypergraphKind.PARTITE, 2, b.shape[0])
    # canonical partite order is row-major over (i, j)
    return WeightVector(spec, b.reshape(-1))


def weights_from_symmetric(matrix) -> WeightVector:
    """k=2 uniform weight of a symmetric 2m x 2m matrix; the diagonal is ignored."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError(f"Expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0 or a.shape[0] % 2:
        raise StructuralError(f"Matrix dimension {a.shape[0]} is not a positive even number")
    if not np.allclose(a, a.T):
        raise StructuralError("Matrix is not symmetric")
    spec = HypergraphSpec(HypergraphKind.UNIFORM, 2, a.shape[0] // 2)
    edges = edge_array(spec)
    return WeightVector(spec, a[edges[:, 0], edges[:, 1]])


def to_matrix(weights: WeightVector) -> np.ndarray:
    """Inverse of weights_from_matrix / weights_from_symmetric for k = 2."""
    spec = weights.spec
    if spec.k != 2:
        raise StructuralError(f"Only k = 2 weights have a matrix form, got {spec}")
    if spec.is_partite:
        return weights.values.reshape(spec.m, spec.m).copy()
    a = np.zeros((spec.n, spec.n))
    edges = edge_array(spec)
    a[edges[:, 0], edges[:, 1]] = weights.values
    a[edges[:, 1], edges[:, 0]] = weights.values
    return a


def two_odd_cliques_weight(r: int) -> WeightVector:
    """2-stochastic weight on 4r+2 vertices supported on two disjoint K_{2r+1}.

    Every perfect matching must cross between the cliques, so P = 0.
    """
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")
    spec = HypergraphSpec(HypergraphKind.UNIFORM, 2, 2 * r + 1)
    half = 2 * r + 1
    value = 1.0 / (2 * r)

    def clique_weight(edge: Edge) -> float:
        return value if (edge[0] < half) == (edge[1] < half) else 0.0

    return WeightVector.from_function(spec, clique_weight)


def parity_weight(r: int) -> WeightVector:
    """3-stochastic weight on V1 x V2 x V3 with |Vi| = 4r+2 supported on even a+b+c.

    Coordinates are counted 1..m inside each part; the total coordinate sum of a
    perfect matching is odd, so no perfect matching has positive weight.
    """
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    m = 4 * r + 2
    spec = HypergraphSpec(HypergraphKind.PARTITE, 3, m)
    value = 1.0 / (m * (2 * r + 1))

    def parity(edge: Edge) -> float:
        coordinate_sum = sum(v - i * m + 1 for i, v in enumerate(edge))
        return value if coordinate_sum % 2 == 0 else 0.0

    return WeightVector.from_function(spec, parity)


def as_weight(payload) -> WeightVector:
    """Coerce a sublist into its 0/1 indicator weight; pass weights through."""
    if isinstance(payload, WeightVector):
        return payload
    if isinstance(payload, EdgeSublist):
        return sublist_indicator(payload)
    raise StructuralError(f"Cannot interpret {type(payload).__name__} as a weight")
