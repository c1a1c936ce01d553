"""Latin hypercube and edge sampling of collocation points.

All point sets are drawn once per run from explicit seeds; nothing here keeps
state between calls.  Budgets are split proportionally to subdomain area
(interior points) and edge length (boundary and interface points), conserving
the requested totals exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .geometry import EDGES, Decomposition, Rect

Seed = Union[int, np.random.SeedSequence]


@dataclass(frozen=True)
class SampleSets:
    """Collocation points owned by one subdomain or by the coarse level."""

    owner: object  # subdomain index, or "coarse"
    interior: np.ndarray        # (n, 2) points strictly inside the owner rect
    outer_boundary: np.ndarray  # (m, 2) points on the outer domain boundary
    interface: np.ndarray       # (k, 2) points on interior edges of the owner

    @property
    def n_points(self) -> int:
        return len(self.interior) + len(self.outer_boundary) + len(self.interface)


def latin_hypercube(n: int, rect: Rect, seed: Seed) -> np.ndarray:
    """n Latin hypercube samples in ``rect``; one point per stratum per axis."""
    if n < 1:
        raise ValueError(f"need at least one sample, got n={n}")
    rng = np.random.default_rng(seed)
    points = np.empty((n, 2))
    bounds = ((rect.x_lo, rect.x_hi), (rect.y_lo, rect.y_hi))
    for axis, (lo, hi) in enumerate(bounds):
        strata = rng.permutation(n)
        jitter = rng.random(n)
        points[:, axis] = lo + (strata + jitter) / n * (hi - lo)
    return points


def sample_edge(n: int, rect: Rect, edge: str, seed: Seed) -> np.ndarray:
    """n stratified samples along one edge of ``rect`` (1-D Latin sampling)."""
    if n < 1:
        raise ValueError(f"need at least one sample, got n={n}")
    start, end = rect.edge_segment(edge)
    rng = np.random.default_rng(seed)
    t = (np.arange(n) + rng.random(n)) / n
    return start + t[:, None] * (end - start)


def _split_proportionally(total: int, shares: np.ndarray) -> np.ndarray:
    """Integer split of ``total`` proportional to ``shares``.

    Floor of the exact quota per entity; the remainder goes one each to the
    entities with the largest shares (ties broken by index).  Every entity
    is then guaranteed at least one unit, rebalanced from the largest counts.
    """
    shares = np.asarray(shares, dtype=float)
    k = len(shares)
    if total < k:
        raise ValueError(f"budget {total} too small to give each of {k} recipients one point")
    quota = total * shares / shares.sum()
    counts = np.floor(quota).astype(int)
    remainder = total - counts.sum()
    if remainder > 0:
        order = np.lexsort((np.arange(k), -shares))
        counts[order[:remainder]] += 1
    while (counts == 0).any():
        counts[np.argmax(counts)] -= 1
        counts[np.argmin(counts)] += 1
    return counts


@dataclass(frozen=True)
class Budgets:
    """Per-entity point counts produced by :func:`allocate_budgets`."""

    interior: tuple[int, ...]          # per subdomain
    boundary: tuple[dict, ...]         # per subdomain: outer edge -> count
    interface: tuple[dict, ...]        # per subdomain: interface edge -> count
    edge_density: float                # points per unit length on edges

    def boundary_total(self, s: int) -> int:
        return sum(self.boundary[s].values())

    def interface_total(self, s: int) -> int:
        return sum(self.interface[s].values())


def allocate_budgets(
    total_interior: int,
    total_boundary_interface: int,
    decomposition: Decomposition,
) -> Budgets:
    """Split global interior/edge budgets across subdomains and their edges."""
    areas = np.array([r.area for r in decomposition.subdomains])
    interior = _split_proportionally(total_interior, areas)

    edge_keys = []  # (subdomain, edge, is_interface)
    lengths = []
    for s, rect in enumerate(decomposition.subdomains):
        for e in EDGES:
            edge_keys.append((s, e, decomposition.interior_edge_flags[s][e]))
            lengths.append(rect.edge_length(e))
    lengths = np.array(lengths)
    counts = _split_proportionally(total_boundary_interface, lengths)

    boundary = [dict() for _ in decomposition.subdomains]
    interface = [dict() for _ in decomposition.subdomains]
    for (s, e, is_if), c in zip(edge_keys, counts):
        (interface if is_if else boundary)[s][e] = int(c)

    return Budgets(
        interior=tuple(int(c) for c in interior),
        boundary=tuple(boundary),
        interface=tuple(interface),
        edge_density=total_boundary_interface / lengths.sum(),
    )


def sample_all(
    decomposition: Decomposition,
    budgets: Budgets,
    coarse_n: int,
    seed: Seed,
) -> tuple[list[SampleSets], SampleSets]:
    """Draw every fine and coarse collocation set for one run.

    Seeds for individual sets are spawned from the master seed in a fixed
    order (per subdomain: interior, then the four edges; then the coarse
    interior and the four domain edges), so any two entities get independent
    streams and the whole collection is reproducible.
    """
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    n_sub = decomposition.n_subdomains
    children = root.spawn(5 * n_sub + 5)

    fine = []
    for s, rect in enumerate(decomposition.subdomains):
        base = 5 * s
        interior = latin_hypercube(budgets.interior[s], rect, children[base])
        bnd_parts, ifc_parts = [], []
        for k, e in enumerate(EDGES):
            child = children[base + 1 + k]
            if e in budgets.boundary[s]:
                bnd_parts.append(sample_edge(budgets.boundary[s][e], rect, e, child))
            else:
                ifc_parts.append(sample_edge(budgets.interface[s][e], rect, e, child))
        fine.append(
            SampleSets(
                owner=s,
                interior=interior,
                outer_boundary=np.vstack(bnd_parts) if bnd_parts else np.empty((0, 2)),
                interface=np.vstack(ifc_parts) if ifc_parts else np.empty((0, 2)),
            )
        )

    base = 5 * n_sub
    domain = decomposition.domain
    coarse_interior = latin_hypercube(coarse_n, domain, children[base])
    perimeter = 2.0 * (domain.width + domain.height)
    coarse_bnd_total = max(4, int(round(budgets.edge_density * perimeter)))
    per_edge = _split_proportionally(
        coarse_bnd_total, np.array([domain.edge_length(e) for e in EDGES])
    )
    coarse_bnd = np.vstack(
        [
            sample_edge(int(c), domain, e, children[base + 1 + k])
            for k, (e, c) in enumerate(zip(EDGES, per_edge))
        ]
    )
    coarse = SampleSets(
        owner="coarse",
        interior=coarse_interior,
        outer_boundary=coarse_bnd,
        interface=np.empty((0, 2)),
    )
    return fine, coarse


def evaluation_grid(domain: Rect, nx: int, ny: int) -> np.ndarray:
    """(nx*ny, 2) uniform tensor grid including the corners, x fastest."""
    if nx < 2 or ny < 2:
        raise ValueError(f"grid needs at least 2 points per axis, got {nx}x{ny}")
    x = np.linspace(domain.x_lo, domain.x_hi, nx)
    y = np.linspace(domain.y_lo, domain.y_hi, ny)
    xx, yy = np.meshgrid(x, y)
    return np.column_stack([xx.ravel(), yy.ravel()])
