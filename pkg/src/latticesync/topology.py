"""r-nearest-neighbor cycles and tori as explicit dense matrices.

Nodes of a torus are numbered row-major over their coordinates, so
coordinate ``(c_1, ..., c_m)`` maps to ``sum(c_i * prod(k_j for j > i))``.
With that ordering the 2-D adjacency matrix is block circulant with
circulant blocks.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from latticesync.errors import BadDimensionCount, DegenerateSize, InvalidOverhead


class Family(str, enum.Enum):
    CYCLE = "cycle"
    TORUS2D = "torus2d"
    TORUSM = "torusm"


@dataclass(frozen=True)
class GraphSpec:
    """Declarative description of a regular lattice.

    ``dims`` holds the node count per dimension (a single entry ``n`` for a
    cycle) and ``r`` is the number of neighbors on each side along every
    dimension.
    """

    family: Family
    dims: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "dims", tuple(int(k) for k in self.dims))
        object.__setattr__(self, "r", int(self.r))

    @classmethod
    def cycle(cls, n: int, r: int) -> GraphSpec:
        return cls(Family.CYCLE, (n,), r)

    @classmethod
    def torus(cls, k1: int, k2: int, r: int) -> GraphSpec:
        return cls(Family.TORUS2D, (k1, k2), r)

    @classmethod
    def mtorus(cls, dims, r: int) -> GraphSpec:
        return cls(Family.TORUSM, tuple(dims), r)

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def num_nodes(self) -> int:
        return math.prod(self.dims)

    @property
    def degree(self) -> int:
        return 2 * self.r * self.m

    def __str__(self):
        dims = ",".join(str(k) for k in self.dims)
        return f"{self.family.value}[{dims}] r={self.r}"


_EXPECTED_DIMS = {Family.CYCLE: 1, Family.TORUS2D: 2}


def validate_spec(spec: GraphSpec) -> GraphSpec:
    """Return ``spec`` unchanged if it describes a simple regular lattice.

    Raises
    ------
    BadDimensionCount
        ``dims`` is empty or its length does not fit the family.
    DegenerateSize
        Some dimension has fewer than 3 nodes.
    InvalidOverhead
        ``r < 1`` or ``2r + 1`` exceeds some dimension, which would make
        neighbors wrap onto each other.
    """
    if not spec.dims:
        raise BadDimensionCount(f"{spec.family.value}: dims must be non-empty")
    expected = _EXPECTED_DIMS.get(spec.family)
    if expected is not None and spec.m != expected:
        raise BadDimensionCount(
            f"{spec.family.value} needs exactly {expected} dim(s), got {spec.m}"
        )
    for k in spec.dims:
        if k < 3:
            raise DegenerateSize(f"dimension size {k} < 3")
    if spec.r < 1:
        raise InvalidOverhead(f"r must be a positive integer, got {spec.r}")
    for k in spec.dims:
        if 2 * spec.r + 1 > k:
            raise InvalidOverhead(f"2r+1 = {2 * spec.r + 1} exceeds dimension size {k}")
    return spec


def _cycle_adjacency(n: int, r: int) -> np.ndarray:
    offsets = np.arange(n)
    dist = np.abs(offsets[:, None] - offsets[None, :])
    dist = np.minimum(dist, n - dist)
    return ((dist >= 1) & (dist <= r)).astype(np.int64)


def build_adjacency(spec: GraphSpec) -> np.ndarray:
    """Dense 0/1 adjacency matrix of the lattice (float64, exact integers).

    The torus is the Cartesian product of its per-dimension cycles, built as
    a Kronecker sum so that the first dimension is the most significant digit
    of the node index.
    """
    validate_spec(spec)
    adj = np.zeros((1, 1), dtype=np.int64)
    for k in spec.dims:
        size = adj.shape[0]
        adj = np.kron(adj, np.eye(k, dtype=np.int64)) + np.kron(
            np.eye(size, dtype=np.int64), _cycle_adjacency(k, spec.r)
        )
    return adj.astype(np.float64)


def build_degree(spec: GraphSpec) -> np.ndarray:
    return np.diag(build_adjacency(spec).sum(axis=1))


def build_laplacian(spec: GraphSpec) -> np.ndarray:
    """Return ``L = D - A``; every row sums to exactly zero."""
    adj = build_adjacency(spec)
    return np.diag(adj.sum(axis=1)) - adj


def edge_count(adj: np.ndarray) -> int:
    return int(np.count_nonzero(np.triu(adj, 1)))
