"""Algebraic connectivity and the synchronizability ratio of regular lattices.

``R = lambda_conn / lambda_max``: second-smallest over largest Laplacian
eigenvalue by sorted order. Larger ``R`` means easier synchronization.

Exact extremes come from per-dimension enumeration. A torus eigenvalue is a
sum of non-negative cycle eigenvalues, each zero at frequency 0, so

* the largest is the sum of the per-dimension maxima, and
* the second smallest is the smallest non-zero-frequency cycle value over
  all dimensions, with every other dimension held at frequency 0.

The published closed forms assume the largest eigenvalue sits at frequency
``k/2`` (even) or ``(k-1)/2`` (odd) in every dimension. That holds for
``r = 1`` but not in general, so those values are computed separately and
audited against the exact ratio.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from latticesync.errors import MixedParity
from latticesync.spectra import FreqIndex, cycle_eigenvalue, cycle_eigenvalues, dirichlet_sum
from latticesync.topology import Family, GraphSpec, validate_spec

DEFAULT_AUDIT_TOL = 1e-9


class PaperCase(str, enum.Enum):
    CYCLE_EVEN = "CycleEven"
    CYCLE_ODD = "CycleOdd"
    TORUS_EVEN = "TorusEven"
    TORUS_ODD = "TorusOdd"
    MTORUS_EVEN = "MTorusEven"
    MTORUS_ODD = "MTorusOdd"
    NONE = "None"


_CASES = {
    (Family.CYCLE, 0): PaperCase.CYCLE_EVEN,
    (Family.CYCLE, 1): PaperCase.CYCLE_ODD,
    (Family.TORUS2D, 0): PaperCase.TORUS_EVEN,
    (Family.TORUS2D, 1): PaperCase.TORUS_ODD,
    (Family.TORUSM, 0): PaperCase.MTORUS_EVEN,
    (Family.TORUSM, 1): PaperCase.MTORUS_ODD,
}


@dataclass(frozen=True)
class Extremes:
    lambda_conn: float
    lambda_max: float
    argmin_index: FreqIndex
    argmax_index: FreqIndex


@dataclass(frozen=True)
class SyncReport:
    spec: GraphSpec
    lambda_conn: float
    lambda_max: float
    ratio_exact: float
    ratio_paper: float | None
    paper_case: PaperCase
    deviation: float | None
    argmin_index: FreqIndex
    argmax_index: FreqIndex


@dataclass(frozen=True)
class DiscrepancyRecord:
    spec: GraphSpec
    paper_case: PaperCase
    ratio_exact: float
    ratio_paper: float
    ratio_paper_literal: float
    deviation: float
    exact_match: bool
    claimed_argmax_index: FreqIndex
    exact_argmax_index: FreqIndex
    claimed_argmax_attains_max: bool
    lambda_max: float
    lambda_at_claimed_argmax: float


def extremes_separable(spec: GraphSpec) -> Extremes:
    """Second-smallest and largest eigenvalue with the indices attaining them.

    Ties resolve to the lowest frequency in ``0..k//2`` and, for the
    connectivity, to the first dimension.
    """
    validate_spec(spec)
    lambda_max = 0.0
    argmax = []
    best_conn = math.inf
    best_dim = best_j = 0
    for dim, k in enumerate(spec.dims):
        # lambda_j == lambda_{k-j}, so the lower half of the spectrum covers every value.
        half = cycle_eigenvalues(k, spec.r)[: k // 2 + 1]
        j_max = int(np.argmax(half))
        lambda_max += half[j_max]
        argmax.append(j_max)
        j_min = 1 + int(np.argmin(half[1:]))
        if half[j_min] < best_conn:
            best_conn, best_dim, best_j = float(half[j_min]), dim, j_min
    argmin = [0] * spec.m
    argmin[best_dim] = best_j
    return Extremes(float(best_conn), float(lambda_max), tuple(argmin), tuple(argmax))


def connectivity(spec: GraphSpec) -> float:
    """Algebraic connectivity (Fiedler value) of the lattice."""
    return extremes_separable(spec).lambda_conn


def paper_case(spec: GraphSpec) -> PaperCase:
    validate_spec(spec)
    parities = {k % 2 for k in spec.dims}
    if len(parities) != 1:
        return PaperCase.NONE
    return _CASES[(spec.family, parities.pop())]


def _neg_one_pow(r: int) -> int:
    return -1 if r % 2 else 1


def _lambda_first(k: int, r: int) -> float:
    # lambda_1 of one cycle: (2r+1) - sin((2r+1) pi/k) / sin(pi/k)
    return (2 * r + 1) - dirichlet_sum(r, 2.0 * math.pi / k)


def _lambda_half_odd(k: int, r: int) -> float:
    # value at j = (k-1)/2: (2r+1) - sin((2r+1) pi (k-1)/(2k)) / sin(pi (k-1)/(2k))
    return (2 * r + 1) - dirichlet_sum(r, math.pi * (k - 1) / k)


def _claimed_argmax(spec: GraphSpec) -> FreqIndex:
    return tuple(k // 2 for k in spec.dims)


def paper_closed_form_R(spec: GraphSpec) -> tuple[float | None, PaperCase]:
    """Synchronizability ratio from the published closed forms.

    Even sizes use ``lambda_{k/2} = 2r + 1 - (-1)^r`` per dimension; odd sizes
    assemble the ratio from the eigenvalue at ``(k-1)/2``. The numerator
    takes the smallest first-frequency value over all dimensions. Returns
    ``(None, PaperCase.NONE)`` when dimension parities are mixed.
    """
    case = paper_case(spec)
    if case is PaperCase.NONE:
        return None, case
    r = spec.r
    numerator = min(_lambda_first(k, r) for k in spec.dims)
    if case in (PaperCase.CYCLE_EVEN, PaperCase.TORUS_EVEN, PaperCase.MTORUS_EVEN):
        denominator = spec.m * (2 * r + 1 - _neg_one_pow(r))
    else:
        denominator = math.fsum(_lambda_half_odd(k, r) for k in spec.dims)
    return numerator / denominator, case


def paper_literal_R(spec: GraphSpec) -> tuple[float | None, PaperCase]:
    """The displayed closed-form ratio, transcribed term by term.

    Differs from :func:`paper_closed_form_R` where the displayed formula
    does: the odd-cycle expression carries ``cos(pi/(2n))`` factors, the odd
    m-torus denominator uses ``(k-1)/k`` as the sine argument, and the torus
    numerators are pinned to one dimension (``k_2`` in 2-D, ``k_1`` in m-D).
    """
    case = paper_case(spec)
    if case is PaperCase.NONE:
        return None, case
    r = spec.r
    q = 2 * r + 1
    sign = _neg_one_pow(r)
    dims = spec.dims
    if case is PaperCase.CYCLE_EVEN:
        n = dims[0]
        s = math.sin(math.pi / n)
        return (q * s - math.sin(q * math.pi / n)) / ((q - sign) * s), case
    if case is PaperCase.CYCLE_ODD:
        n = dims[0]
        s = math.sin(math.pi / n)
        c = math.cos(math.pi / (2 * n))
        num = (q * s - math.sin(q * math.pi / n)) * c
        den = (q * c - math.cos(q * math.pi / n)) * s
        return num / den, case

    def kernel(x: float) -> float:
        return math.sin(q * x) / math.sin(x)

    if case is PaperCase.TORUS_EVEN:
        return (q - kernel(math.pi / dims[1])) / (2 * q - 2 * sign), case
    if case is PaperCase.TORUS_ODD:
        k1, k2 = dims
        den = 2 * q - kernel(math.pi * (k1 - 1) / (2 * k1)) - kernel(math.pi * (k2 - 1) / (2 * k2))
        return (q - kernel(math.pi / k2)) / den, case
    numerator = q - kernel(math.pi / dims[0])
    if case is PaperCase.MTORUS_EVEN:
        return numerator / (spec.m * (q - sign)), case
    den = q * spec.m - math.fsum(kernel(math.pi * (k - 1) / k) for k in dims)
    return numerator / den, case


def sync_exact(spec: GraphSpec) -> SyncReport:
    ext = extremes_separable(spec)
    ratio = ext.lambda_conn / ext.lambda_max
    ratio_paper, case = paper_closed_form_R(spec)
    deviation = None if ratio_paper is None else abs(ratio - ratio_paper)
    return SyncReport(
        spec=spec,
        lambda_conn=ext.lambda_conn,
        lambda_max=ext.lambda_max,
        ratio_exact=ratio,
        ratio_paper=ratio_paper,
        paper_case=case,
        deviation=deviation,
        argmin_index=ext.argmin_index,
        argmax_index=ext.argmax_index,
    )


def verify_theorems(spec: GraphSpec, tol: float = DEFAULT_AUDIT_TOL) -> DiscrepancyRecord:
    """Audit the closed-form ratio against the exact one for a single lattice."""
    report = sync_exact(spec)
    if report.ratio_paper is None:
        raise MixedParity(f"{spec}: dimension sizes mix even and odd")
    literal, _ = paper_literal_R(spec)
    claimed = _claimed_argmax(spec)
    at_claimed = math.fsum(cycle_eigenvalue(k, spec.r, j) for k, j in zip(spec.dims, claimed))
    return DiscrepancyRecord(
        spec=spec,
        paper_case=report.paper_case,
        ratio_exact=report.ratio_exact,
        ratio_paper=report.ratio_paper,
        ratio_paper_literal=literal,
        deviation=report.deviation,
        exact_match=report.deviation <= tol,
        claimed_argmax_index=claimed,
        exact_argmax_index=report.argmax_index,
        claimed_argmax_attains_max=abs(at_claimed - report.lambda_max) <= tol,
        lambda_max=report.lambda_max,
        lambda_at_claimed_argmax=at_claimed,
    )
