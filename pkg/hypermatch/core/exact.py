"""Exact desk-scale evaluation of partition functions and matching counts.

All recursions pin the lowest-index free vertex u and branch over the edges
whose smallest vertex is u, so the recursion tree is canonical. Subproblems
depend only on the set of free vertices and are memoized on its bitmask.
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..config import resolve
from ..utils.helpers import exp_or_none, log_sum_exp
from .errors import CapacityError, DomainError, StructuralError
from .hypergraph import Edge, EdgeSublist, HypergraphSpec, edge_array, index_edge
from .weights import WeightVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionValue:
    """ln P with an explicit zero flag (log_value is -inf exactly when is_zero)."""

    log_value: float
    is_zero: bool

    @property
    def value(self) -> Optional[float]:
        """P in the natural domain, or None when it does not fit a float."""
        return exp_or_none(self.log_value)

    @classmethod
    def from_log(cls, log_value: float) -> "PartitionValue":
        return cls(float(log_value), log_value == -math.inf)


@dataclass(frozen=True)
class MatchingCountTable:
    """Exact numbers of matchings of each size s = 0..m."""

    counts: Tuple[int, ...]

    @property
    def perfect(self) -> int:
        return self.counts[-1]

    @property
    def max_size(self) -> int:
        return max(s for s, c in enumerate(self.counts) if c)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, s):
        return self.counts[s]

    def __len__(self):
        return len(self.counts)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"size": range(len(self.counts)), "count": list(self.counts)})


def perfect_matching_count(spec: HypergraphSpec) -> int:
    """Number of perfect matchings of the complete hypergraph spec."""
    if spec.is_partite:
        return math.factorial(spec.m) ** (spec.k - 1)
    return math.factorial(spec.n) // (
        math.factorial(spec.k) ** spec.m * math.factorial(spec.m)
    )


def matching_count_bound(spec: HypergraphSpec) -> int:
    """Number of matchings of all sizes in the complete hypergraph spec."""
    k, m = spec.k, spec.m
    total = 0
    for s in range(m + 1):
        if spec.is_partite:
            total += math.comb(m, s) ** k * math.factorial(s) ** (k - 1)
        else:
            total += math.comb(spec.n, k * s) * (
                math.factorial(k * s) // (math.factorial(k) ** s * math.factorial(s))
            )
    return total


def _check_budget(required: int, budget: int, what: str):
    logger.debug("%s: %d leaves against budget %d", what, required, budget)
    if required > budget:
        raise CapacityError(
            f"{what} needs {required} leaves, above the budget of {budget}",
            required=required,
            budget=budget,
        )


def _mask(edge) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << int(v)
    return mask


def _edges_by_lowest_vertex(spec: HypergraphSpec, indices) -> List[List[Tuple[int, int]]]:
    """For each vertex u, the (mask, edge index) pairs of edges whose minimum is u."""
    edges = edge_array(spec)
    by_min: List[List[Tuple[int, int]]] = [[] for _ in range(spec.n)]
    for i in indices:
        row = edges[i]
        by_min[int(row[0])].append((_mask(row), int(i)))
    return by_min


def partition_function_exact(
    weights: WeightVector, leaf_budget: Optional[int] = None
) -> PartitionValue:
    """ln P_H(W) by pinned-vertex expansion over the support of W."""
    spec = weights.spec
    _check_budget(
        perfect_matching_count(spec), resolve("leaf_budget", leaf_budget), "exact expansion"
    )
    log_w = weights.log_values
    by_min = [
        [(mask, float(log_w[i])) for mask, i in bucket]
        for bucket in _edges_by_lowest_vertex(spec, weights.support())
    ]

    @lru_cache(maxsize=None)
    def expand(free: int) -> float:
        if not free:
            return 0.0
        u = (free & -free).bit_length() - 1
        terms = []
        for mask, lw in by_min[u]:
            if mask & free == mask:
                rest = expand(free ^ mask)
                if rest > -math.inf:
                    terms.append(lw + rest)
        return log_sum_exp(terms)

    log_value = expand((1 << spec.n) - 1)
    logger.debug(
        "exact expansion of %s visited %d subproblems", spec, expand.cache_info().currsize
    )
    return PartitionValue.from_log(log_value)


def partition_function_dp_partite(
    weights: WeightVector, bit_budget: Optional[int] = None
) -> PartitionValue:
    """ln P_H(W) for a complete k-partite hypergraph by subset dynamic programming.

    Sweeps the vertices of part 0 in order; the state is the set of used
    vertices of parts 1..k-1, packed into (k-1)*m bits.
    """
    spec = weights.spec
    if not spec.is_partite:
        raise StructuralError(f"Subset DP needs a complete k-partite hypergraph, got {spec}")
    bits = (spec.k - 1) * spec.m
    budget = resolve("dp_bit_budget", bit_budget)
    if bits > budget:
        raise CapacityError(
            f"Subset DP needs {bits} state bits, above the budget of {budget}",
            required=bits,
            budget=budget,
        )
    edges = edge_array(spec)
    log_w = weights.log_values
    by_first: Dict[int, List[Tuple[int, float]]] = defaultdict(list)
    for i in weights.support():
        row = edges[i]
        mask = 0
        for v in row[1:]:
            mask |= 1 << (int(v) - spec.m)
        by_first[int(row[0])].append((mask, float(log_w[i])))

    layer: Dict[int, float] = {0: 0.0}
    for a in range(spec.m):
        terms: Dict[int, List[float]] = defaultdict(list)
        for state, lv in layer.items():
            for mask, lw in by_first[a]:
                if not state & mask:
                    terms[state | mask].append(lv + lw)
        layer = {state: log_sum_exp(terms[state]) for state in sorted(terms)}
        if not layer:
            return PartitionValue.from_log(-math.inf)
    return PartitionValue.from_log(layer.get((1 << bits) - 1, -math.inf))


def permanent_ryser(matrix, max_size: Optional[int] = None) -> float:
    """Permanent by Ryser's inclusion-exclusion with Gray-code column updates."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError(f"Expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("Matrix entries must be finite")
    if (a < 0).any():
        raise DomainError("Matrix entries must be nonnegative")
    n = a.shape[0]
    limit = resolve("ryser_max_size", max_size)
    if n > limit:
        raise CapacityError(
            f"Ryser permanent of size {n} exceeds the limit of {limit}",
            required=n,
            budget=limit,
        )
    if n == 0:
        return 1.0

    def signed_terms():
        row_sums = np.zeros(n)
        gray = 0
        for g in range(1, 1 << n):
            j = (g & -g).bit_length() - 1
            gray ^= 1 << j
            if gray >> j & 1:
                row_sums += a[:, j]
            else:
                row_sums -= a[:, j]
            sign = -1.0 if (n - bin(gray).count("1")) % 2 else 1.0
            yield sign * float(np.prod(row_sums))

    return math.fsum(signed_terms())


def hafnian_exact(matrix, max_size: Optional[int] = None) -> float:
    """Hafnian of a symmetric 2m x 2m matrix by pinned-vertex recursion."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StructuralError(f"Expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n % 2:
        raise StructuralError(f"Hafnian needs an even dimension, got {n}")
    if not np.allclose(a, a.T):
        raise StructuralError("Hafnian needs a symmetric matrix")
    limit = resolve("hafnian_max_size", max_size)
    if n > limit:
        raise CapacityError(
            f"Hafnian of size {n} exceeds the limit of {limit}", required=n, budget=limit
        )

    @lru_cache(maxsize=None)
    def expand(free: int) -> float:
        if not free:
            return 1.0
        i = (free & -free).bit_length() - 1
        rest = free ^ (1 << i)
        terms = []
        partners = rest
        while partners:
            j = (partners & -partners).bit_length() - 1
            partners ^= 1 << j
            if a[i, j] != 0.0:
                terms.append(a[i, j] * expand(rest ^ (1 << j)))
        return math.fsum(terms)

    return expand((1 << n) - 1)


def count_matchings_by_size(
    sub: EdgeSublist, leaf_budget: Optional[int] = None
) -> MatchingCountTable:
    """Exact counts of matchings of every size within a sublist."""
    spec = sub.base
    _check_budget(
        matching_count_bound(spec), resolve("leaf_budget", leaf_budget), "matching count"
    )
    by_min = [
        [mask for mask, _ in bucket]
        for bucket in _edges_by_lowest_vertex(spec, sorted(sub.members))
    ]

    @lru_cache(maxsize=None)
    def count(free: int) -> Tuple[int, ...]:
        if not free:
            return (1,)
        u = (free & -free).bit_length() - 1
        # u left unmatched
        totals = list(count(free ^ (1 << u)))
        for mask in by_min[u]:
            if mask & free == mask:
                for s, c in enumerate(count(free ^ mask)):
                    while len(totals) <= s + 1:
                        totals.append(0)
                    totals[s + 1] += c
        return tuple(totals)

    counts = list(count((1 << spec.n) - 1))
    counts += [0] * (spec.m + 1 - len(counts))
    return MatchingCountTable(tuple(counts))


def max_matching(
    sub: EdgeSublist, leaf_budget: Optional[int] = None
) -> Tuple[int, List[Edge]]:
    """Size of a maximum matching in the sublist together with a witness."""
    spec = sub.base
    _check_budget(
        matching_count_bound(spec), resolve("leaf_budget", leaf_budget), "maximum matching"
    )
    members = sorted(sub.members)
    by_min = _edges_by_lowest_vertex(spec, members)

    # greedy lower bound in canonical order
    edges = edge_array(spec)
    used = 0
    greedy: List[int] = []
    for i in members:
        mask = _mask(edges[i])
        if not used & mask:
            used |= mask
            greedy.append(i)
    best = {"size": len(greedy), "edges": list(greedy)}
    seen: Dict[int, int] = {}
    chosen: List[int] = []

    def search(free: int):
        if len(chosen) > best["size"]:
            best["size"], best["edges"] = len(chosen), list(chosen)
        if best["size"] == spec.m or not free:
            return
        if len(chosen) + bin(free).count("1") // spec.k <= best["size"]:
            return
        if seen.get(free, -1) >= len(chosen):
            return
        seen[free] = len(chosen)
        u = (free & -free).bit_length() - 1
        for mask, i in by_min[u]:
            if mask & free == mask:
                chosen.append(i)
                search(free ^ mask)
                chosen.pop()
        search(free ^ (1 << u))

    search((1 << spec.n) - 1)
    return best["size"], [index_edge(spec, i) for i in sorted(best["edges"])]


def max_matching_size(sub: EdgeSublist, leaf_budget: Optional[int] = None) -> int:
    """Size of a maximum matching in the sublist."""
    return max_matching(sub, leaf_budget)[0]
