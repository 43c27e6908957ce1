"""Seeded random instances and named fixtures.

All randomness comes from numpy.random.Generator(PCG64(seed)), so a seed
reproduces the same instance on every platform.
"""

import numpy as np
from numpy.random import PCG64, Generator

from ..core.errors import DomainError
from ..core.hypergraph import EdgeSublist, HypergraphKind, HypergraphSpec
from ..core.weights import (
    WeightVector,
    parity_weight,
    two_odd_cliques_weight,
    uniform_stochastic_weight,
)

FIXTURES = ("two-cliques", "parity", "uniform-stochastic")


def make_rng(seed: int) -> Generator:
    if not 0 <= int(seed) < 2**64:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return Generator(PCG64(int(seed)))


def gen_balanced(spec: HypergraphSpec, alpha: float, seed: int) -> WeightVector:
    """Weights drawn independently and uniformly from [1, alpha]."""
    if not alpha >= 1.0:
        raise DomainError(f"alpha must be at least 1, got {alpha}")
    if alpha == 1.0:
        return WeightVector.constant(spec, 1.0)
    values = make_rng(seed).uniform(1.0, alpha, size=spec.edge_count)
    return WeightVector(spec, values)


def gen_near_stochastic(
    spec: HypergraphSpec, alpha: float, delta: float, seed: int
) -> WeightVector:
    """alpha-balanced weight with total m and every vertex marginal within delta/m of 1.

    The uniform k-stochastic weight is multiplied edge by edge by 1 + e_S with
    |e_S| <= min(delta/(3m), (alpha-1)/(alpha+1)), then rescaled to total m.
    """
    if not alpha >= 1.0:
        raise DomainError(f"alpha must be at least 1, got {alpha}")
    if not 0 < delta <= spec.m:
        raise DomainError(f"delta must lie in (0, m], got {delta}")
    spread = min(delta / (3.0 * spec.m), (alpha - 1.0) / (alpha + 1.0))
    noise = make_rng(seed).uniform(-spread, spread, size=spec.edge_count)
    values = uniform_stochastic_weight(spec).values * (1.0 + noise)
    return WeightVector(spec, values * (spec.m / values.sum()))


def gen_sublist(spec: HypergraphSpec, density: float, seed: int) -> EdgeSublist:
    """Each edge joins the sublist independently with probability density."""
    if not 0.0 <= density <= 1.0:
        raise DomainError(f"density must lie in [0, 1], got {density}")
    keep = make_rng(seed).random(spec.edge_count) < density
    return EdgeSublist(spec, frozenset(int(i) for i in np.flatnonzero(keep)))


def fixture_weight(name: str, spec: HypergraphSpec) -> WeightVector:
    """Named k-stochastic fixtures: two disjoint odd cliques, the parity
    construction and the uniform stochastic weight."""
    if name == "uniform-stochastic":
        return uniform_stochastic_weight(spec)
    if name == "two-cliques":
        if spec.kind is not HypergraphKind.UNIFORM or spec.k != 2 or spec.m < 3 or spec.m % 2 == 0:
            raise DomainError(f"two-cliques needs a complete graph with odd m >= 3, got {spec}")
        return two_odd_cliques_weight((spec.m - 1) // 2)
    if name == "parity":
        if spec.kind is not HypergraphKind.PARTITE or spec.k != 3 or spec.m % 4 != 2:
            raise DomainError(f"parity needs a 3-partite base with m = 2 mod 4, got {spec}")
        return parity_weight((spec.m - 2) // 4)
    raise DomainError(f"Unknown fixture '{name}'. Use one of {', '.join(FIXTURES)}")
