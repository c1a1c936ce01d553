"""Rectangular domains, overlapping decompositions and partition-of-unity blending.

A regular decomposition splits a rectangle into nx*ny equal tiles and extends
every tile by half the overlap width across each interior edge, so adjacent
subdomains share a strip of total width ``overlap_width``.  The partition of
unity is built from products of per-axis linear ramps that descend to zero
across those strips, which makes every weight vanish exactly on the interface
part of its subdomain boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

EDGES = ("left", "right", "bottom", "top")


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi]."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self):
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise ValueError(
                f"degenerate rectangle: [{self.x_lo}, {self.x_hi}] x [{self.y_lo}, {self.y_hi}]"
            )

    @property
    def width(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> float:
        return self.y_hi - self.y_lo

    @property
    def area(self) -> float:
        return self.width * self.height

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Closure containment test for an (n, 2) array (or a single point)."""
        p = np.atleast_2d(np.asarray(points, dtype=float))
        inside = (
            (p[:, 0] >= self.x_lo)
            & (p[:, 0] <= self.x_hi)
            & (p[:, 1] >= self.y_lo)
            & (p[:, 1] <= self.y_hi)
        )
        return inside if np.asarray(points).ndim > 1 else bool(inside[0])

    def edge_segment(self, edge: str) -> tuple[np.ndarray, np.ndarray]:
        """Endpoints of one edge, as (start, end) arrays."""
        if edge == "left":
            return np.array([self.x_lo, self.y_lo]), np.array([self.x_lo, self.y_hi])
        if edge == "right":
            return np.array([self.x_hi, self.y_lo]), np.array([self.x_hi, self.y_hi])
        if edge == "bottom":
            return np.array([self.x_lo, self.y_lo]), np.array([self.x_hi, self.y_lo])
        if edge == "top":
            return np.array([self.x_lo, self.y_hi]), np.array([self.x_hi, self.y_hi])
        raise ValueError(f"unknown edge id {edge!r}, expected one of {EDGES}")

    def edge_length(self, edge: str) -> float:
        return self.height if edge in ("left", "right") else self.width


@dataclass(frozen=True)
class Decomposition:
    """A domain split into nx*ny overlapping rectangular subdomains.

    Subdomain s = j*nx + i covers tile (i, j); tiles are counted with x
    fastest.  ``interior_edge_flags[s][edge]`` is True when that edge lies
    strictly inside the domain (an interface edge), False when it is part of
    the outer boundary.
    """

    domain: Rect
    nx: int
    ny: int
    overlap_fraction: float
    overlap_width: float
    subdomains: tuple[Rect, ...]
    tiles: tuple[Rect, ...]
    interior_edge_flags: tuple[dict, ...] = field(repr=False)

    @property
    def n_subdomains(self) -> int:
        return self.nx * self.ny

    def outer_edges(self, s: int) -> list[str]:
        return [e for e in EDGES if not self.interior_edge_flags[s][e]]

    def interface_edges(self, s: int) -> list[str]:
        return [e for e in EDGES if self.interior_edge_flags[s][e]]


def make_regular_decomposition(
    domain: Rect, nx: int, ny: int, overlap_fraction: float
) -> Decomposition:
    """Split ``domain`` into nx*ny equal tiles extended by half an overlap strip.

    The total shared strip between adjacent subdomains has width
    ``overlap_fraction * max(tile_w, tile_h)``; edges on the outer boundary are
    never extended.
    """
    if not (isinstance(nx, int) and isinstance(ny, int)) or nx < 1 or ny < 1:
        raise ValueError(f"subdomain counts must be positive integers, got nx={nx}, ny={ny}")
    if not 0.0 < overlap_fraction < 1.0:
        raise ValueError(f"overlap_fraction must lie in (0, 1), got {overlap_fraction}")

    tile_w = domain.width / nx
    tile_h = domain.height / ny
    delta = overlap_fraction * max(tile_w, tile_h)
    if delta >= min(tile_w, tile_h):
        raise ValueError(
            f"overlap width {delta:g} is not smaller than the smallest tile side "
            f"{min(tile_w, tile_h):g}; a subdomain would swallow a non-adjacent tile"
        )

    # linspace keeps the outermost tile boundaries exactly on the domain edges
    grid_x = np.linspace(domain.x_lo, domain.x_hi, nx + 1)
    grid_y = np.linspace(domain.y_lo, domain.y_hi, ny + 1)

    tiles = []
    subdomains = []
    flags = []
    half = 0.5 * delta
    for j in range(ny):
        for i in range(nx):
            tiles.append(Rect(grid_x[i], grid_x[i + 1], grid_y[j], grid_y[j + 1]))
            x_lo = grid_x[i] - (half if i > 0 else 0.0)
            x_hi = grid_x[i + 1] + (half if i < nx - 1 else 0.0)
            y_lo = grid_y[j] - (half if j > 0 else 0.0)
            y_hi = grid_y[j + 1] + (half if j < ny - 1 else 0.0)
            subdomains.append(Rect(x_lo, x_hi, y_lo, y_hi))
            flags.append(
                {"left": i > 0, "right": i < nx - 1, "bottom": j > 0, "top": j < ny - 1}
            )

    return Decomposition(
        domain=domain,
        nx=nx,
        ny=ny,
        overlap_fraction=overlap_fraction,
        overlap_width=delta if nx * ny > 1 else 0.0,
        subdomains=tuple(subdomains),
        tiles=tuple(tiles),
        interior_edge_flags=tuple(flags),
    )


@dataclass(frozen=True)
class PartitionOfUnity:
    """Normalized products of per-axis linear ramps over a decomposition.

    Each raw weight is 1 on the part of a subdomain outside every overlap
    strip, falls linearly to 0 across each interior strip, and stays 1 up to
    edges on the outer boundary.  Raw products are normalized by their sum over
    all covering subdomains, so the weights sum to one exactly inside the
    domain and are zero outside.
    """

    decomposition: Decomposition

    def raw_weights(self, points: np.ndarray) -> np.ndarray:
        """(n, S) unnormalized ramp products; exact zeros outside closures."""
        p = np.atleast_2d(np.asarray(points, dtype=float))
        dec = self.decomposition
        delta = dec.overlap_width
        out = np.empty((p.shape[0], dec.n_subdomains))
        for s, rect in enumerate(dec.subdomains):
            fl = dec.interior_edge_flags[s]
            x, y = p[:, 0], p[:, 1]
            w = np.ones(p.shape[0])
            if fl["left"]:
                w = w * np.clip((x - rect.x_lo) / delta, 0.0, 1.0)
            if fl["right"]:
                w = w * np.clip((rect.x_hi - x) / delta, 0.0, 1.0)
            if fl["bottom"]:
                w = w * np.clip((y - rect.y_lo) / delta, 0.0, 1.0)
            if fl["top"]:
                w = w * np.clip((rect.y_hi - y) / delta, 0.0, 1.0)
            w[~rect.contains(p)] = 0.0
            out[:, s] = w
        return out

    def weights(self, points: np.ndarray) -> np.ndarray:
        """(n, S) normalized weights; rows sum to 1 in the domain, 0 outside."""
        raw = self.raw_weights(points)
        total = raw.sum(axis=1, keepdims=True)
        covered = total[:, 0] > 0.0
        norm = np.zeros_like(raw)
        norm[covered] = raw[covered] / total[covered]
        return norm

    def evaluate(self, s: int, point: Sequence[float]) -> float:
        """Weight of subdomain ``s`` at a single point."""
        return float(self.weights(np.asarray(point, dtype=float))[0, s])


def make_partition_of_unity(decomposition: Decomposition) -> PartitionOfUnity:
    return PartitionOfUnity(decomposition)


def locate_coverage(decomposition: Decomposition, point: Sequence[float]) -> set[int]:
    """Indices of all subdomains whose closure contains ``point``."""
    p = np.asarray(point, dtype=float)
    return {
        s for s, rect in enumerate(decomposition.subdomains) if rect.contains(p)
    }


def blend_batch(
    pou: PartitionOfUnity,
    evaluators: Sequence[Callable[[np.ndarray], np.ndarray]],
    points: np.ndarray,
) -> np.ndarray:
    """Weighted combination sum_s chi_s(x) * u_s(x) over an (n, 2) array.

    Evaluators are only called on points where their weight is strictly
    positive (extension by zero), so a subdomain solution is never evaluated
    outside its own rectangle.
    """
    dec = pou.decomposition
    if len(evaluators) != dec.n_subdomains:
        raise ValueError(
            f"expected {dec.n_subdomains} evaluators, got {len(evaluators)}"
        )
    p = np.atleast_2d(np.asarray(points, dtype=float))
    w = pou.weights(p)
    out = np.zeros(p.shape[0])
    for s, ev in enumerate(evaluators):
        mask = w[:, s] > 0.0
        if mask.any():
            out[mask] += w[mask, s] * np.asarray(ev(p[mask]), dtype=float)
    return out


def blend_solutions(
    pou: PartitionOfUnity,
    evaluators: Sequence[Callable],
    point: Sequence[float],
) -> float:
    """Partition-of-unity blend of per-subdomain scalar functions at one point.

    Each evaluator is called with a single 2-vector.  Raises if the point lies
    outside the global domain.
    """
    p = np.asarray(point, dtype=float)
    if not pou.decomposition.domain.contains(p):
        raise ValueError(f"point {p.tolist()} lies outside the global domain")
    wrapped = [
        (lambda pts, e=ev: np.array([e(q) for q in pts], dtype=float))
        for ev in evaluators
    ]
    return float(blend_batch(pou, wrapped, p))
