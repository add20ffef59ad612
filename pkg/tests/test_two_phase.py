import json
import math

import numpy as np
import pytest

from powertour.geometry import point_set, power_cost
from powertour.greedy import greedy_ham_path
from powertour.mst import build_mst
from powertour.sekanina import tree_to_cycle_cost_bound
from powertour.structures import close_path, validate
from powertour.two_phase import two_phase_tour

from conftest import random_points


def test_sparse_points_reduce_to_plain_greedy():
    # all pairwise distances exceed the cutoff: phase 1 is vacuous
    pts = point_set([[0.0, 0.0], [0.0, 0.9], [0.9, 0.0], [0.9, 0.9]])
    k = 2
    tour, report = two_phase_tour(pts, k, cutoff=0.5)
    assert all(s == 1 for s in report.tree_sizes)
    path, _ = greedy_ham_path(pts)
    reference = close_path(path, pts)
    assert tour.order == reference.order
    assert power_cost(tour.edges, k).unscaled == pytest.approx(
        power_cost(reference.edges, k).unscaled)


def test_single_cluster_matches_tree_cycle_bound():
    rng = np.random.default_rng(5)
    pts = point_set(0.45 + 0.02 * rng.uniform(size=(18, 3)))
    k = 3
    tour, report = two_phase_tour(pts, k, cutoff=0.5)
    assert len(report.tree_sizes) == 1
    assert report.greedy_added == 0
    mst = build_mst(pts)
    _t, _c, bound = tree_to_cycle_cost_bound(mst, pts, k)
    assert power_cost(tour.edges, k).unscaled <= bound * (1 + 1e-9)


def test_random_instances_within_certified_bound(rng):
    for k in (3, 6, 9, 10):
        bound = 3 * math.sqrt(5) * (2 / 3) ** (1 / k) * math.sqrt(k)
        for seed in range(8):
            n = int(rng.integers(2, 200))
            pts = random_points(seed + 1000, n, k)
            tour, report = two_phase_tour(pts, k)
            assert validate(tour, pts) == []
            assert power_cost(tour.edges, k).scaled <= bound * (1 + 1e-9)


def test_path_system_within_forest_cycle_budget(rng):
    for seed in range(8):
        k = int(rng.integers(2, 7))
        n = int(rng.integers(10, 150))
        pts = random_points(seed + 1100, n, k)
        # generous cutoff so phase 1 produces real trees
        tour, report = two_phase_tour(pts, k, cutoff=0.6 * math.sqrt(k))
        if report.forest_cost.edge_count:
            budget = k * math.log(3.0) + report.forest_cost.log_unscaled
            assert report.path_system_cost.log_unscaled <= budget + 1e-9


def test_degenerate_inputs():
    pts = point_set([[0.5, 0.5], [0.5, 0.5], [0.5, 0.5]])
    tour, _ = two_phase_tour(pts, 2)
    assert validate(tour, pts) == []
    assert power_cost(tour.edges, 2).unscaled == 0.0

    two = point_set([[0.1, 0.1], [0.9, 0.9]])
    tour, report = two_phase_tour(two, 2)
    assert len(tour.edges) == 2


def test_default_cutoff_and_report_shape(rng):
    pts = random_points(21, 40, 4)
    tour, report = two_phase_tour(pts, 4)
    assert report.cutoff == pytest.approx(4 ** -0.25)
    assert sum(report.tree_sizes) == 40
    body = report.to_dict()
    json.dumps(body)  # serializable
    assert body["tree_count"] == len(report.tree_sizes)
    assert body["tour"]["s_k"] == pytest.approx(power_cost(tour.edges, 4).scaled)
