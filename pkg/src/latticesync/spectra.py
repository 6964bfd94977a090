"""Closed-form Laplacian eigenvalues of r-nearest-neighbor cycles and tori.

The Laplacian of ``C_n^r`` is circulant with first row
``[2r, -1 x r, 0, ..., 0, -1 x r]``, so its eigenvalue at frequency ``j`` is

    lambda_j = 2r - 2 * sum_{i=1..r} cos(2*pi*j*i/n)
             = (2r + 1) - D_r(2*pi*j/n),

where ``D_r(x) = 1 + 2 sum cos(i x) = sin((r + 1/2) x) / sin(x / 2)`` is the
Dirichlet kernel. A torus is a Cartesian product of cycles, so its
eigenvalue at a multi-index is the sum of the per-dimension cycle values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from latticesync.errors import DimensionMismatch, IndexOutOfRange, InvalidOverhead
from latticesync.topology import GraphSpec, validate_spec

# Below this, the Dirichlet quotient is 0/0 up to rounding noise.
_QUOTIENT_EPS = 1e-9

FreqIndex = tuple[int, ...]


def dirichlet_sum(r: int, theta: float) -> float:
    """Evaluate ``1 + 2 * sum_{j=1..r} cos(j * theta)``.

    Uses the quotient ``sin((r + 1/2) theta) / sin(theta / 2)`` away from
    multiples of 2*pi and the direct cosine sum near them, which gives the
    limit ``2r + 1`` exactly at ``theta == 0``.
    """
    if r < 1:
        raise InvalidOverhead(f"r must be >= 1, got {r}")
    half = math.sin(theta / 2.0)
    if abs(half) > _QUOTIENT_EPS:
        return math.sin((r + 0.5) * theta) / half
    return 1.0 + 2.0 * math.fsum(math.cos(j * theta) for j in range(1, r + 1))


def cosine_sum_eigenvalue(n: int, r: int, j: int) -> float:
    """Cycle eigenvalue straight from the circulant first row (no kernel identity)."""
    return 2.0 * r - 2.0 * math.fsum(
        math.cos(2.0 * math.pi * j * i / n) for i in range(1, r + 1)
    )


def cycle_eigenvalue(n: int, r: int, j: int) -> float:
    """Laplacian eigenvalue of ``C_n^r`` at frequency index ``j``."""
    if r < 1 or 2 * r + 1 > n:
        raise InvalidOverhead(f"need 1 <= r and 2r+1 <= n, got n={n}, r={r}")
    if not 0 <= j < n:
        raise IndexOutOfRange(f"frequency index {j} outside 0..{n - 1}")
    if j == 0:
        return 0.0
    # Fold onto 0 < theta <= pi so that lambda_j and lambda_{n-j} are bitwise equal.
    j = min(j, n - j)
    return (2 * r + 1) - dirichlet_sum(r, 2.0 * math.pi * j / n)


def cycle_eigenvalues(n: int, r: int) -> np.ndarray:
    """All ``n`` cycle eigenvalues indexed by frequency."""
    return np.array([cycle_eigenvalue(n, r, j) for j in range(n)])


def _check_index(spec: GraphSpec, idx) -> FreqIndex:
    idx = tuple(int(j) for j in idx)
    if len(idx) != spec.m:
        raise DimensionMismatch(f"index has {len(idx)} entries, graph has {spec.m} dims")
    for j, k in zip(idx, spec.dims):
        if not 0 <= j < k:
            raise IndexOutOfRange(f"frequency index {j} outside 0..{k - 1}")
    return idx


def torus_eigenvalue(spec: GraphSpec, idx) -> float:
    """Eigenvalue at multi-index ``idx``: sum of per-dimension cycle values."""
    validate_spec(spec)
    idx = _check_index(spec, idx)
    total = 0.0
    for k, j in zip(spec.dims, idx):
        total += cycle_eigenvalue(k, spec.r, j)
    return total


@dataclass(frozen=True)
class Spectrum:
    """Every Laplacian eigenvalue of a lattice together with its frequency index.

    ``indices`` is an ``(N, m)`` integer array in row-major grid order and
    ``values`` the matching eigenvalues. ``order`` is a stable argsort of
    ``values``, so the sorted view keeps the index labels.
    """

    spec: GraphSpec
    indices: np.ndarray
    values: np.ndarray
    order: np.ndarray

    @property
    def sorted_values(self) -> np.ndarray:
        return self.values[self.order]

    @property
    def sorted_indices(self) -> np.ndarray:
        return self.indices[self.order]

    @property
    def entries(self) -> list[tuple[FreqIndex, float]]:
        return [(tuple(int(j) for j in idx), float(v)) for idx, v in zip(self.indices, self.values)]

    def __len__(self):
        return len(self.values)


def full_spectrum(spec: GraphSpec) -> Spectrum:
    """Evaluate the closed form over the whole frequency grid."""
    validate_spec(spec)
    per_dim = [cycle_eigenvalues(k, spec.r) for k in spec.dims]
    values = reduce(np.add.outer, per_dim).ravel()
    grids = np.meshgrid(*[np.arange(k) for k in spec.dims], indexing="ij")
    indices = np.stack([g.ravel() for g in grids], axis=1)
    order = np.argsort(values, kind="stable")
    return Spectrum(spec=spec, indices=indices, values=values, order=order)
