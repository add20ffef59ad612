"""Two-phase tour: threshold forest, per-tree cycles, warm-started greedy.

Phase 1 builds a forest with Kruskal restricted to edges of weight at most
``cutoff`` (default k^(-1/4)), converts each tree with >= 3 vertices into
a certified cube-of-tree cycle, removes the maximum-weight edge of each
cycle, and collects the resulting open paths (2-vertex trees contribute
their single edge, singletons stay isolated) into a path system F0.
Phase 2 completes F0 with the greedy minimum-edge merging and closes the
final path into a tour.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import CertificateError, InputError
from .geometry import PointSet, PowerCost, power_cost, power_cost_from_weights
from .greedy import greedy_ham_path
from .mst import build_threshold_forest
from .sekanina import _cube_cycle, verify_double_cover
from .structures import PathSystem, Tour, close_path


@dataclass(frozen=True)
class PhaseReport:
    """Per-phase costs of one two-phase run (all under the same exponent)."""

    k: int
    cutoff: float
    tree_sizes: tuple[int, ...]
    forest_cost: PowerCost
    path_system_cost: PowerCost
    greedy_added: int
    path_cost: PowerCost
    closing_weight: float
    tour_cost: PowerCost
    elapsed_s: float

    def to_dict(self) -> dict:
        def cost_block(c: PowerCost) -> dict:
            return {"S_k": None if c.overflow else c.unscaled, "s_k": c.scaled,
                    "log_S_k": c.log_unscaled, "overflow": c.overflow}

        return {
            "k": self.k,
            "cutoff": self.cutoff,
            "tree_count": len(self.tree_sizes),
            "tree_sizes": list(self.tree_sizes),
            "forest": cost_block(self.forest_cost),
            "path_system": cost_block(self.path_system_cost),
            "greedy_added": self.greedy_added,
            "final_path": cost_block(self.path_cost),
            "closing_weight": self.closing_weight,
            "tour": cost_block(self.tour_cost),
            "elapsed_s": self.elapsed_s,
        }


def two_phase_tour(points: PointSet, k: int, cutoff: float | None = None
                   ) -> tuple[Tour, PhaseReport]:
    """Run both phases and return the tour plus per-phase cost report."""
    if points.n < 2:
        raise InputError("need at least 2 points")
    if k < 1:
        raise InputError("exponent must be positive")
    if cutoff is None:
        cutoff = float(k) ** -0.25
    start = time.perf_counter()
    coords = points.coords

    trees = build_threshold_forest(points, cutoff)
    path_pairs: list[tuple[int, int]] = []
    for tree in trees:
        if tree.n <= 1:
            continue
        if tree.n == 2:
            path_pairs.append((tree.vertices[0], tree.vertices[1]))
            continue
        adj = {v: list(ns) for v, ns in tree.adjacency.items()}
        anchor = tree.vertices[0]
        cyc, hops = _cube_cycle(adj, anchor)
        edge_id = {e.key(): i for i, e in enumerate(tree.edges)}
        id_hops = {ce: tuple(edge_id[p] for p in path) for ce, path in hops.items()}
        problems = verify_double_cover(tree, id_hops, anchor)
        if problems:
            raise CertificateError("; ".join(problems))
        cycle_edges = []
        for (a, b) in hops:
            w = float(math.dist(coords[a], coords[b]))
            cycle_edges.append((w, a, b))
        # drop the heaviest cycle edge (ties: lexicographically smallest pair)
        drop = max(cycle_edges, key=lambda t: (t[0], (-t[1], -t[2])))
        for w, a, b in cycle_edges:
            if (w, a, b) != drop:
                path_pairs.append((a, b))

    system = PathSystem.from_pairs(points.n, path_pairs)
    fo_weights = [float(math.dist(coords[a], coords[b])) for a, b in path_pairs]
    forest_cost = power_cost_from_weights(
        [e.weight for t in trees for e in t.edges], k)
    path_system_cost = power_cost_from_weights(fo_weights, k)

    # the per-tree conversion guarantees S_k(F0) <= 3^k * sum_i S_k(T_i)
    log_budget = k * math.log(3.0) + forest_cost.log_unscaled
    if path_system_cost.log_unscaled > log_budget + 1e-9:
        raise CertificateError("path system cost exceeds the per-tree cycle budget")

    ham_path, trace = greedy_ham_path(points, warm_start=system)
    tour = close_path(ham_path, points)
    path_cost = power_cost(ham_path.edges, k)
    tour_cost = power_cost(tour.edges, k)
    report = PhaseReport(
        k=k,
        cutoff=cutoff,
        tree_sizes=tuple(t.n for t in trees),
        forest_cost=forest_cost,
        path_system_cost=path_system_cost,
        greedy_added=len(trace),
        path_cost=path_cost,
        closing_weight=tour.edges[-1].weight,
        tour_cost=tour_cost,
        elapsed_s=time.perf_counter() - start,
    )
    return tour, report
