"""Dense symmetric eigensolver used as independent ground truth.

Cyclic Jacobi method. Each sweep visits every off-diagonal pair once in
round-robin (tournament) order: the ``N/2`` pairs of one round are disjoint,
so their rotations commute and are applied together as one orthogonal
similarity transform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from latticesync.errors import NonConvergence, NotSymmetric, TooLarge
from latticesync.spectra import full_spectrum
from latticesync.topology import GraphSpec, build_laplacian, validate_spec

MAX_ORACLE_ORDER = 4096


@dataclass(frozen=True)
class OracleResult:
    eigenvalues: np.ndarray
    iterations: int
    off_diagonal_norm: float


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint pairs covering every unordered pair of ``range(n)`` once."""
    players = list(range(n + (n % 2)))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = [
            (players[i], players[size - 1 - i])
            for i in range(size // 2)
            if max(players[i], players[size - 1 - i]) < n
        ]
        p = np.array([min(pair) for pair in pairs], dtype=np.intp)
        q = np.array([max(pair) for pair in pairs], dtype=np.intp)
        rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Annihilate ``a[p, q]`` for one round of disjoint pairs; returns ``J^T a J``."""
    apq = a[p, q]
    zero = apq == 0.0
    if zero.all():
        return a
    theta = (a[q, q] - a[p, p]) / (2.0 * np.where(zero, 1.0, apq))
    # Smaller-angle root of t^2 + 2 t theta - 1 = 0; hypot avoids overflow for huge theta.
    t = np.copysign(1.0, theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    t[zero] = 0.0
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    rot = np.eye(a.shape[0])
    rot[p, p] = c
    rot[q, q] = c
    rot[p, q] = s
    rot[q, p] = -s
    a = rot.T @ a @ rot
    a[p, q] = 0.0
    a[q, p] = 0.0
    return a


def jacobi_eigenvalues(mat, tol: float | None = None, max_sweeps: int = 50) -> OracleResult:
    """All eigenvalues of a symmetric matrix, sorted ascending.

    ``tol`` bounds the Frobenius norm of the off-diagonal part at return and
    defaults to ``1e-10 * ||mat||_F``. A diagonal input returns its diagonal
    untouched.
    """
    a = np.array(mat, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NotSymmetric("matrix is not exactly symmetric")
    if tol is None:
        tol = 1e-10 * float(np.linalg.norm(a))
    elif tol <= 0:
        raise ValueError("tol must be positive")
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be >= 1")

    n = a.shape[0]
    rounds = _round_robin(n) if n > 1 else []
    off = _off_norm(a)
    sweeps = 0
    while off > tol:
        if sweeps == max_sweeps:
            raise NonConvergence(
                f"off-diagonal norm {off:.3e} > {tol:.3e} after {max_sweeps} sweeps"
            )
        for p, q in rounds:
            a = _rotate(a, p, q)
        sweeps += 1
        off = _off_norm(a)
    return OracleResult(eigenvalues=np.sort(np.diag(a)), iterations=sweeps, off_diagonal_norm=off)


def verify_closed_form(spec: GraphSpec, tol: float | None = None) -> float:
    """Max absolute gap between the sorted closed-form spectrum and the oracle.

    ``tol`` is passed to the eigensolver as its convergence tolerance.
    """
    validate_spec(spec)
    if spec.num_nodes > MAX_ORACLE_ORDER:
        raise TooLarge(f"{spec} has {spec.num_nodes} nodes > {MAX_ORACLE_ORDER}")
    oracle = jacobi_eigenvalues(build_laplacian(spec), tol=tol)
    closed = full_spectrum(spec).sorted_values
    return float(np.max(np.abs(oracle.eigenvalues - closed)))
