import math

import numpy as np
import pytest

from powertour.constructions import cube_vertex_subset, diagonal_pair, k4_even_weight_code
from powertour.errors import InputError
from powertour.geometry import point_set, power_cost
from powertour.greedy import (classify_edges, greedy_edge_count_by_length,
                              greedy_ham_path, minimum_join_edge)
from powertour.structures import PathSystem, validate

from conftest import random_points


def test_square_corners_path(square_corners):
    path, trace = greedy_ham_path(square_corners)
    assert validate(path, square_corners) == []
    assert power_cost(path.edges, 2).unscaled == pytest.approx(3.0)
    assert all(e.weight == pytest.approx(1.0) for e in trace)


def test_code_square_any_path():
    pts = point_set([[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]])
    path, _ = greedy_ham_path(pts)
    assert power_cost(path.edges, 3).unscaled == pytest.approx(3 * 2 ** 1.5, rel=1e-9)


def test_two_points():
    pts = point_set([[0.1, 0.9], [0.8, 0.3]])
    path, trace = greedy_ham_path(pts)
    assert len(trace) == 1
    assert path.order in ((0, 1), (1, 0))


def test_replay_against_stepwise_minimum(rng):
    """The fast scan must reproduce the per-step minimum-edge choice."""
    for seed in range(12):
        n = int(rng.integers(3, 25))
        pts = random_points(seed + 800, n, 3)
        path, trace = greedy_ham_path(pts)
        system = PathSystem(n)
        for e in trace:
            best = minimum_join_edge(pts, system)
            assert best is not None
            d, u, v = best
            assert (u, v) == e.key()
            assert d == pytest.approx(e.weight, rel=1e-12)
            system.add_path_edge(e.u, e.v)
        assert minimum_join_edge(pts, system) is None


def test_replay_with_warm_start(rng):
    for seed in range(6):
        n = int(rng.integers(6, 20))
        pts = random_points(seed + 850, n, 2)
        warm = PathSystem(n)
        warm.add_path_edge(0, 1)
        warm.add_path_edge(3, 4)
        _path, trace = greedy_ham_path(pts, warm_start=warm)
        system = warm.copy()
        for e in trace:
            best = minimum_join_edge(pts, system)
            assert best is not None and (best[1], best[2]) == e.key()
            system.add_path_edge(e.u, e.v)


def test_warm_start_respected(rng):
    pts = random_points(13, 12, 2)
    warm = PathSystem(12)
    warm.add_path_edge(0, 5)
    warm.add_path_edge(5, 7)
    warm.add_path_edge(2, 3)
    path, trace = greedy_ham_path(pts, warm_start=warm)
    assert validate(path, pts) == []
    assert len(trace) == 12 - 1 - 3
    path_keys = {e.key() for e in path.edges}
    for pair in [(0, 5), (5, 7), (2, 3)]:
        assert tuple(sorted(pair)) in path_keys
    # the original warm start object is untouched
    assert len(warm.edge_pairs) == 3


def test_invalid_warm_start_rejected():
    pts = random_points(14, 6, 2)
    warm = PathSystem(5)
    with pytest.raises(InputError):
        greedy_ham_path(pts, warm_start=warm)
    bad = PathSystem(6)
    bad.add_path_edge(0, 1)
    bad.edge_pairs.append((0, 2))
    bad.neighbors[0].append(2)
    bad.neighbors[2].append(0)
    bad.edge_pairs.append((0, 3))
    bad.neighbors[0].append(3)
    bad.neighbors[3].append(0)
    with pytest.raises(InputError):
        greedy_ham_path(pts, warm_start=bad)


def test_trace_edges_below_two_thirds_threshold(rng):
    for seed in range(25):
        k = int(rng.integers(2, 9))
        n = int(rng.integers(3, 60))
        pts = random_points(seed + 900, n, k)
        _, trace = greedy_ham_path(pts)
        cap = math.sqrt(2 * k / 3)
        assert all(e.weight <= cap * (1 + 1e-9) for e in trace[:-1])
        assert trace[-1].weight <= math.sqrt(k) * (1 + 1e-9)


def test_edge_count_all_edges():
    pts = random_points(15, 9, 3)
    _, trace = greedy_ham_path(pts)
    assert greedy_edge_count_by_length(trace, 0.0) == 8


def test_edge_count_diagonal_pair():
    k = 6
    _, trace = greedy_ham_path(diagonal_pair(k))
    assert greedy_edge_count_by_length(trace, k) == 1


def test_edge_count_even_weight_code():
    _, trace = greedy_ham_path(k4_even_weight_code())
    assert greedy_edge_count_by_length(trace, 5) == 0


def test_edge_counts_below_code_size_bound(rng):
    for seed in range(10):
        k = int(rng.integers(4, 13))
        n = int(rng.integers(3, min(2 ** k, 120) + 1))
        pts = cube_vertex_subset(k, n, seed)
        _, trace = greedy_ham_path(pts)
        for j in range(1, k + 1):
            assert greedy_edge_count_by_length(trace, j) < 2 ** (k - j + 1)


def test_classify_all_short():
    k = 10
    edges = [type("E", (), {"weight": math.sqrt(k / 10)})() for _ in range(5)]
    counts = classify_edges(edges, k)
    assert counts == {"short": 5, "medium": 0, "long": 0, "very_long": 0}


def test_classify_diagonal_very_long():
    k = 6
    path, _ = greedy_ham_path(diagonal_pair(k))
    counts = classify_edges(path, k)
    assert counts["very_long"] == 1


def test_trace_json_roundtrip(rng):
    import json

    from powertour.greedy import trace_from_json, trace_to_json

    pts = random_points(16, 11, 3)
    _, trace = greedy_ham_path(pts)
    rows = json.loads(json.dumps(trace_to_json(trace)))
    back = trace_from_json(rows)
    assert [(e.u, e.v, e.weight) for e in back] == \
        [(e.u, e.v, e.weight) for e in trace]


def test_at_most_one_very_long_edge_on_cube_vertices(rng):
    for seed in range(25):
        k = int(rng.integers(3, 12))
        n = int(rng.integers(3, min(2 ** k, 100) + 1))
        pts = cube_vertex_subset(k, n, seed + 31)
        path, _ = greedy_ham_path(pts)
        assert classify_edges(path, k)["very_long"] <= 1
