"""Complete k-uniform and complete k-partite hypergraphs.

Vertices are the integers 0..km-1. For the partite kind, part i is the
block [i*m, (i+1)*m). Edges are sorted vertex tuples and the canonical
edge order is lexicographic on those tuples for both kinds.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from .errors import StructuralError

Edge = Tuple[int, ...]


class HypergraphKind(str, Enum):
    UNIFORM = "complete-uniform"
    PARTITE = "complete-partite"

    @classmethod
    def parse(cls, value: str) -> "HypergraphKind":
        """Accept the canonical names and a few short aliases."""
        aliases = {
            "uniform": cls.UNIFORM,
            "complete-uniform": cls.UNIFORM,
            "partite": cls.PARTITE,
            "complete-partite": cls.PARTITE,
        }
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise StructuralError(f"Unknown hypergraph kind: {value}")


@dataclass(frozen=True)
class HypergraphSpec:
    """Structural description of a complete hypergraph with km vertices."""

    kind: HypergraphKind
    k: int
    m: int

    def __post_init__(self):
        if not isinstance(self.kind, HypergraphKind):
            object.__setattr__(self, "kind", HypergraphKind.parse(self.kind))
        if int(self.k) != self.k or self.k < 2:
            raise StructuralError(f"Edge size k must be an integer >= 2, got {self.k}")
        if int(self.m) != self.m or self.m < 1:
            raise StructuralError(f"Part count m must be an integer >= 1, got {self.m}")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "m", int(self.m))

    @property
    def n(self) -> int:
        return self.k * self.m

    @property
    def is_partite(self) -> bool:
        return self.kind is HypergraphKind.PARTITE

    @property
    def edge_count(self) -> int:
        if self.is_partite:
            return self.m**self.k
        return math.comb(self.n, self.k)

    @property
    def degree(self) -> int:
        """Number of edges containing any fixed vertex."""
        if self.is_partite:
            return self.m ** (self.k - 1)
        return math.comb(self.n - 1, self.k - 1)

    def __str__(self):
        return f"{self.kind.value}(k={self.k}, m={self.m})"


def vertex_part(spec: HypergraphSpec, v: int) -> int:
    """Part index of vertex v in a complete k-partite hypergraph."""
    _check_vertex(spec, v)
    if not spec.is_partite:
        raise StructuralError(f"{spec} has no parts")
    return v // spec.m


def _check_vertex(spec: HypergraphSpec, v: int):
    if not 0 <= v < spec.n:
        raise StructuralError(f"Vertex {v} outside [0, {spec.n}) for {spec}")


def validate_edge(spec: HypergraphSpec, edge: Iterable[int]) -> Edge:
    """Return edge as a sorted tuple after checking it belongs to spec."""
    vertices = tuple(sorted(int(v) for v in edge))
    if len(vertices) != spec.k:
        raise StructuralError(
            f"Edge {vertices} has {len(vertices)} vertices, expected {spec.k}"
        )
    if len(set(vertices)) != spec.k:
        raise StructuralError(f"Edge {vertices} repeats a vertex")
    for v in vertices:
        _check_vertex(spec, v)
    if spec.is_partite:
        parts = [v // spec.m for v in vertices]
        if parts != list(range(spec.k)):
            raise StructuralError(
                f"Edge {vertices} must meet every part of {spec} exactly once"
            )
    return vertices


def enumerate_edges(spec: HypergraphSpec) -> List[Edge]:
    """All edges of spec in canonical (lexicographic) order."""
    return list(_iter_edges(spec))


def _iter_edges(spec: HypergraphSpec) -> Iterator[Edge]:
    if spec.is_partite:
        blocks = [range(i * spec.m, (i + 1) * spec.m) for i in range(spec.k)]
        return itertools.product(*blocks)
    return itertools.combinations(range(spec.n), spec.k)


@lru_cache(maxsize=64)
def edge_array(spec: HypergraphSpec) -> np.ndarray:
    """Read-only (edge_count, k) array of edge vertices in canonical order."""
    edges = np.fromiter(
        itertools.chain.from_iterable(_iter_edges(spec)),
        dtype=np.int64,
        count=spec.edge_count * spec.k,
    ).reshape(spec.edge_count, spec.k)
    edges.flags.writeable = False
    return edges


def edge_index(spec: HypergraphSpec, edge: Iterable[int]) -> int:
    """Rank of edge in canonical order, without enumerating edges."""
    vertices = validate_edge(spec, edge)
    if spec.is_partite:
        rank = 0
        for i, v in enumerate(vertices):
            rank = rank * spec.m + (v - i * spec.m)
        return rank
    # combinatorial number system, lexicographic variant
    n, k = spec.n, spec.k
    rank = 0
    prev = -1
    for i, c in enumerate(vertices):
        r = k - i
        rank += math.comb(n - prev - 1, r) - math.comb(n - c, r)
        prev = c
    return rank


def index_edge(spec: HypergraphSpec, index: int) -> Edge:
    """Edge at position index of the canonical order."""
    if not 0 <= index < spec.edge_count:
        raise StructuralError(
            f"Edge index {index} outside [0, {spec.edge_count}) for {spec}"
        )
    if spec.is_partite:
        digits = []
        for _ in range(spec.k):
            index, digit = divmod(index, spec.m)
            digits.append(digit)
        digits.reverse()
        return tuple(i * spec.m + a for i, a in enumerate(digits))
    n, k = spec.n, spec.k
    vertices = []
    prev = -1
    remaining = index
    for i in range(k):
        r = k - i
        top = math.comb(n - prev - 1, r)
        # largest c with top - C(n - c, r) <= remaining
        lo, hi = prev + 1, n - r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if top - math.comb(n - mid, r) <= remaining:
                lo = mid
            else:
                hi = mid - 1
        remaining -= top - math.comb(n - lo, r)
        vertices.append(lo)
        prev = lo
    return tuple(vertices)


def incident_edges(spec: HypergraphSpec, v: int) -> Iterator[int]:
    """Indices of the edges containing vertex v."""
    _check_vertex(spec, v)
    if spec.is_partite:
        part = v // spec.m
        blocks = [
            [v] if i == part else range(i * spec.m, (i + 1) * spec.m)
            for i in range(spec.k)
        ]
        for edge in itertools.product(*blocks):
            yield edge_index(spec, edge)
        return
    others = [u for u in range(spec.n) if u != v]
    for rest in itertools.combinations(others, spec.k - 1):
        yield edge_index(spec, rest + (v,))


def induced(
    spec: HypergraphSpec, vertex_set: Iterable[int]
) -> Tuple[HypergraphSpec, Dict[int, int]]:
    """Spec of the induced hypergraph on vertex_set and the old-to-new vertex map."""
    chosen = sorted(set(int(v) for v in vertex_set))
    for v in chosen:
        _check_vertex(spec, v)
    if spec.is_partite:
        per_part = [[v for v in chosen if v // spec.m == i] for i in range(spec.k)]
        sizes = {len(block) for block in per_part}
        if len(sizes) != 1 or 0 in sizes:
            raise StructuralError(
                f"Induced vertex set must meet every part equally, got sizes "
                f"{[len(block) for block in per_part]}"
            )
        l = sizes.pop()
        mapping = {
            v: i * l + j for i, block in enumerate(per_part) for j, v in enumerate(block)
        }
        return HypergraphSpec(spec.kind, spec.k, l), mapping
    if not chosen or len(chosen) % spec.k:
        raise StructuralError(
            f"Induced vertex set size {len(chosen)} is not a positive multiple of {spec.k}"
        )
    mapping = {v: j for j, v in enumerate(chosen)}
    return HypergraphSpec(spec.kind, spec.k, len(chosen) // spec.k), mapping


@dataclass(frozen=True)
class EdgeSublist:
    """A sub-hypergraph given by a set of edge indices of a complete base."""

    base: HypergraphSpec
    members: FrozenSet[int]

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        bad = [i for i in members if not 0 <= i < self.base.edge_count]
        if bad:
            raise StructuralError(
                f"Edge indices {sorted(bad)[:5]} are not edges of {self.base}"
            )
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, spec: HypergraphSpec) -> "EdgeSublist":
        return cls(spec, frozenset(range(spec.edge_count)))

    @classmethod
    def empty(cls, spec: HypergraphSpec) -> "EdgeSublist":
        return cls(spec, frozenset())

    def edges(self) -> List[Edge]:
        """Member edges in canonical order."""
        return [index_edge(self.base, i) for i in sorted(self.members)]

    def __len__(self):
        return len(self.members)

    def __contains__(self, index):
        return index in self.members


def from_edges(spec: HypergraphSpec, edges: Iterable[Iterable[int]]) -> EdgeSublist:
    """Build a sublist from explicit vertex tuples."""
    return EdgeSublist(spec, frozenset(edge_index(spec, e) for e in edges))


@dataclass(frozen=True)
class DegreeReport:
    degrees: Tuple[int, ...]
    regular: bool
    d: Optional[int]


def degrees(sub: EdgeSublist) -> DegreeReport:
    """Per-vertex degrees of a sublist and whether it is d-regular."""
    counts = np.zeros(sub.base.n, dtype=np.int64)
    if sub.members:
        rows = edge_array(sub.base)[sorted(sub.members)]
        counts = np.bincount(rows.ravel(), minlength=sub.base.n)
    values = tuple(int(c) for c in counts)
    regular = len(set(values)) == 1
    return DegreeReport(values, regular, values[0] if regular else None)
