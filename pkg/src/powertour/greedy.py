"""Greedy minimum-edge path merging.

Starting from a collection of vertex-disjoint paths (by default: all
singletons; optionally a warm-start PathSystem), repeatedly insert the
cheapest edge joining endpoints of two distinct paths until a single
Hamiltonian path remains.

The engine sorts all candidate pairs once by (distance, min index, max
index) and scans in that order, accepting a pair whenever both vertices
are still path endpoints of distinct components.  Because a pair, once
invalid (an endpoint became interior, or the paths merged), can never
become valid again, the scan picks exactly the minimum valid pair at
every step - the same sequence as recomputing the minimum per step, which
``minimum_join_edge`` below implements as the replay oracle for tests.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InputError
from .geometry import Edge, PointSet, pairwise_sq
from .structures import HamPath, PathSystem, path_from_order, validate


def minimum_join_edge(points: PointSet, system: PathSystem) -> tuple[int, int, float] | None:
    """Recompute the minimum joinable edge over current endpoint pairs.

    Tie-break: smallest (weight, min index, max index).  Returns None when
    a single path remains.  O(p^2) over the path count p; this is the
    step-by-step reference the fast scan must reproduce.
    """
    ends = sorted(system.endpoint_vertices())
    best = None
    coords = points.coords
    for i, u in enumerate(ends):
        for v in ends[i + 1:]:
            if not system.can_join(u, v):
                continue
            d = float(np.linalg.norm(coords[u] - coords[v]))
            key = (d, u, v)
            if best is None or key < best:
                best = key
    return best


def greedy_ham_path(points: PointSet, warm_start: PathSystem | None = None
                    ) -> tuple[HamPath, list[Edge]]:
    """Run the greedy path-merging construction to a Hamiltonian path.

    Returns the path and the trace of inserted edges in insertion order
    (warm-start edges are not part of the trace).  Each trace edge was
    minimal among all edges joining endpoints of distinct paths at its
    step.
    """
    n = points.n
    if n < 2:
        raise InputError("need at least 2 points")
    if warm_start is None:
        system = PathSystem(n)
    else:
        if warm_start.n != n:
            raise InputError(f"warm start covers {warm_start.n} vertices, expected {n}")
        problems = validate(warm_start, points)
        if problems:
            raise InputError("invalid warm start: " + "; ".join(problems))
        system = warm_start.copy()

    trace: list[Edge] = []
    needed = system.component_count() - 1
    if needed > 0:
        d2 = pairwise_sq(points.coords)
        iu, iv = np.triu_indices(n, k=1)
        flat = d2[iu, iv]
        order = np.lexsort((iv, iu, flat))
        for idx in order:
            u = int(iu[idx])
            v = int(iv[idx])
            if not system.can_join(u, v):
                continue
            system.add_path_edge(u, v)
            trace.append(Edge(u, v, math.sqrt(float(flat[idx]))))
            needed -= 1
            if needed == 0:
                break

    walk = system.paths()
    if len(walk) != 1:
        raise InputError("warm start prevented completion")  # unreachable for valid input
    return path_from_order(points, walk[0]), trace


def trace_to_json(trace: list[Edge]) -> list[dict]:
    """Insertion trace as JSON rows, one per step, for replay tooling."""
    return [{"step": i, "u": e.u, "v": e.v, "weight": e.weight}
            for i, e in enumerate(trace)]


def trace_from_json(rows: list[dict]) -> list[Edge]:
    try:
        ordered = sorted(rows, key=lambda r: r["step"])
        return [Edge(int(r["u"]), int(r["v"]), float(r["weight"])) for r in ordered]
    except (KeyError, TypeError, ValueError) as ex:
        raise InputError(f"malformed trace row: {ex}") from ex


def greedy_edge_count_by_length(trace: list[Edge], j: float, k: int | None = None) -> int:
    """Number of trace edges with squared length >= j.

    On cube-vertex inputs squared lengths are integers, so the comparison
    carries a 1e-9 slack against float noise.
    """
    return sum(1 for e in trace if e.weight * e.weight >= j - 1e-9)


#: Squared-length thresholds, as fractions of k, between the four buckets.
CLASS_THRESHOLDS = (1.0 / 5.0, 3.0 / 5.0, 2.0 / 3.0)


def classify_edges(edges, k: int) -> dict[str, int]:
    """Bucket edges by squared length: short <= k/5 < medium <= 3k/5 <
    long <= 2k/3 < very_long.  Diagnostic only."""
    if hasattr(edges, "edges"):
        edges = edges.edges
    t1, t2, t3 = (c * k for c in CLASS_THRESHOLDS)
    counts = {"short": 0, "medium": 0, "long": 0, "very_long": 0}
    for e in edges:
        sq = e.weight * e.weight
        if sq <= t1 + 1e-9:
            counts["short"] += 1
        elif sq <= t2 + 1e-9:
            counts["medium"] += 1
        elif sq <= t3 + 1e-9:
            counts["long"] += 1
        else:
            counts["very_long"] += 1
    return counts
