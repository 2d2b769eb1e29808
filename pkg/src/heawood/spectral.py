"""Laplacian and adjacency spectra via a cyclic Jacobi eigensolver.

The solver sweeps over the off-diagonal entries in round-robin order,
rotating ``n // 2`` disjoint index pairs at once so each round is a
handful of vectorized row/column updates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

EIGEN_TOL = 1e-10
OFFDIAG_RTOL = 1e-12
BOUNDARY_TOL = 1e-6
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """The eigensolver hit its sweep cap without converging."""


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with the absolute tolerance they carry."""

    values: tuple[float, ...]
    tol: float = EIGEN_TOL

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def zero_multiplicity(self) -> int:
        return sum(1 for x in self.values if abs(x) <= self.tol)


def laplacian_matrix(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for i, j in g.edges:
        lap[i, j] = lap[j, i] = -1.0
    lap[np.diag_indices(g.n)] = g.degrees
    return lap


def adjacency_matrix(g: Graph) -> np.ndarray:
    adj = np.zeros((g.n, g.n))
    for i, j in g.edges:
        adj[i, j] = adj[j, i] = 1.0
    return adj


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings for one full sweep; every index pair appears exactly once."""
    m = n + (n & 1)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            p, q = players[k], players[m - 1 - k]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


_ROUNDS: dict[int, list[tuple[np.ndarray, np.ndarray]]] = {}


def jacobi_eigh(
    matrix: np.ndarray,
    *,
    vectors: bool = False,
    rtol: float = OFFDIAG_RTOL,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigenvalues (ascending) and optionally eigenvectors of a symmetric matrix.

    Converged when the off-diagonal Frobenius norm drops below
    ``rtol * ||A||_F``.  Raises :class:`ConvergenceError` otherwise.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-14):
        raise ValueError("matrix must be symmetric")
    v = np.eye(n) if vectors else None
    scale = np.linalg.norm(a)
    target = rtol * scale
    skip = target / max(n, 1)
    if n not in _ROUNDS:
        _ROUNDS[n] = _round_robin(n)
    rounds = _ROUNDS[n]

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.linalg.norm(a[offdiag]))

    sweeps = 0
    while off_norm() > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off_norm():.3e}, target {target:.3e})"
            )
        sweeps += 1
        for ps, qs in rounds:
            apq = a[ps, qs]
            # skipping entries below target / n cannot stall: once every pair
            # is that small the off-diagonal norm is already below target
            active = np.abs(apq) > max(skip, 1e-300)
            if not active.any():
                continue
            ps, qs, apq = ps[active], qs[active], apq[active]
            theta = (a[qs, qs] - a[ps, ps]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c
            # the rotations of one round act on disjoint index pairs, so they
            # compose into a single orthogonal J and A <- J^T A J
            j = np.eye(n)
            j[ps, ps] = c
            j[qs, qs] = c
            j[ps, qs] = s
            j[qs, ps] = -s
            a = j.T @ a @ j
            a[ps, qs] = 0.0
            a[qs, ps] = 0.0
            if v is not None:
                v = v @ j
    diag = np.diag(a).copy()
    order = np.argsort(diag, kind="stable")
    return diag[order], (v[:, order] if v is not None else None)


def _spectrum(matrix: np.ndarray) -> Spectrum:
    values, _ = jacobi_eigh(matrix)
    return Spectrum(tuple(float(x) for x in values))


def laplacian_spectrum(g: Graph) -> Spectrum:
    """Eigenvalues of D - A in ascending order."""
    return _spectrum(laplacian_matrix(g))


def adjacency_spectrum(g: Graph) -> Spectrum:
    return _spectrum(adjacency_matrix(g))


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; zero (within tol) iff disconnected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    return laplacian_spectrum(g)[1]


def fiedler_vector(g: Graph) -> np.ndarray:
    if g.n < 2:
        raise ValueError("Fiedler vector needs at least 2 vertices")
    _, vecs = jacobi_eigh(laplacian_matrix(g), vectors=True)
    assert vecs is not None
    return vecs[:, 1]


@dataclass(frozen=True)
class RamanujanCheck:
    ramanujan: bool
    degree: int
    threshold: float
    worst: float
    boundary: bool


def ramanujan_check(g: Graph) -> RamanujanCheck:
    """Compare the largest nontrivial |adjacency eigenvalue| with 2*sqrt(d-1).

    Only one copy of ``d`` is discarded as trivial.  ``boundary`` is set
    when the comparison falls within ``BOUNDARY_TOL`` of the threshold.
    """
    degs = set(g.degrees)
    if len(degs) != 1:
        raise ValueError("Ramanujan test needs a regular graph")
    from .invariants import is_connected

    if not is_connected(g):
        raise ValueError("Ramanujan test needs a connected graph")
    (d,) = degs
    values = list(adjacency_spectrum(g).values)
    values.pop()  # largest eigenvalue of a connected d-regular graph is d
    threshold = 2.0 * math.sqrt(d - 1) if d >= 1 else 0.0
    worst = max((abs(x) for x in values), default=0.0)
    return RamanujanCheck(
        ramanujan=worst <= threshold + BOUNDARY_TOL,
        degree=d,
        threshold=threshold,
        worst=worst,
        boundary=abs(worst - threshold) <= BOUNDARY_TOL,
    )


def is_ramanujan(g: Graph) -> bool:
    return ramanujan_check(g).ramanujan
