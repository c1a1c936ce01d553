"""Manufactured Poisson problem with a two-frequency sine product solution."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Rect

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class PoissonProblem:
    """Poisson equation laplacian(u) = r on a rectangle with Dirichlet data.

    The exact solution is
        u(x) = sin(omega1*pi*x1)*sin(omega1*pi*x2) + sin(omega2*pi*x1)*sin(omega2*pi*x2)
    and the forcing and boundary values are derived from it.
    """

    omega1: float
    omega2: float
    domain: Rect = Rect(0.0, 1.0, 0.0, 1.0)

    def __post_init__(self):
        if self.omega1 <= 0 or self.omega2 <= 0:
            raise ValueError(
                f"frequencies must be positive, got ({self.omega1}, {self.omega2})"
            )


def exact_solution(p: PoissonProblem, points: np.ndarray) -> np.ndarray:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    x, y = pts[:, 0], pts[:, 1]
    a = np.pi * p.omega1
    b = np.pi * p.omega2
    u = np.sin(a * x) * np.sin(a * y) + np.sin(b * x) * np.sin(b * y)
    return u if np.asarray(points).ndim > 1 else float(u[0])


def forcing(p: PoissonProblem, points: np.ndarray) -> np.ndarray:
    """Right-hand side r = laplacian of the exact solution."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    x, y = pts[:, 0], pts[:, 1]
    a = np.pi * p.omega1
    b = np.pi * p.omega2
    r = -2.0 * a * a * np.sin(a * x) * np.sin(a * y) - 2.0 * b * b * np.sin(b * x) * np.sin(b * y)
    return r if np.asarray(points).ndim > 1 else float(r[0])


def on_boundary(domain: Rect, points: np.ndarray, tol: float = BOUNDARY_TOL) -> np.ndarray:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    x, y = pts[:, 0], pts[:, 1]
    inside = (
        (x >= domain.x_lo - tol)
        & (x <= domain.x_hi + tol)
        & (y >= domain.y_lo - tol)
        & (y <= domain.y_hi + tol)
    )
    on_edge = (
        (np.abs(x - domain.x_lo) <= tol)
        | (np.abs(x - domain.x_hi) <= tol)
        | (np.abs(y - domain.y_lo) <= tol)
        | (np.abs(y - domain.y_hi) <= tol)
    )
    return inside & on_edge


def boundary_value(p: PoissonProblem, points: np.ndarray) -> np.ndarray:
    """Dirichlet data g = trace of the exact solution on the domain boundary."""
    ok = on_boundary(p.domain, points)
    if not np.all(ok):
        bad = np.atleast_2d(np.asarray(points, dtype=float))[~ok]
        raise ValueError(f"point {bad[0].tolist()} is not on the domain boundary")
    return exact_solution(p, points)
