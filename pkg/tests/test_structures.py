import numpy as np
import pytest

from powertour.errors import InputError
from powertour.geometry import Edge, point_set, power_cost
from powertour.structures import (Matching, PathSystem, close_path,
                                  cycle_to_matchings, path_from_order, to_json_dict,
                                  tour_from_order, tree_from_pairs, validate)

from conftest import random_points


def test_close_path_square(square_corners):
    p = path_from_order(square_corners, (0, 1, 2, 3))
    assert sum(e.weight ** 2 for e in p.edges) == pytest.approx(3.0)
    t = close_path(p, square_corners)
    assert sum(e.weight ** 2 for e in t.edges) == pytest.approx(4.0)
    assert len(t.edges) == 4


def test_close_path_two_points():
    pts = point_set([[0.0, 0.0], [0.6, 0.8]])
    t = close_path(path_from_order(pts, (0, 1)), pts)
    assert len(t.edges) == 2
    assert power_cost(t.edges, 3).unscaled == pytest.approx(2.0, rel=1e-9)


def test_close_path_code_square():
    pts = point_set([[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]])
    t = close_path(path_from_order(pts, (0, 1, 2, 3)), pts)
    assert power_cost(t.edges, 3).unscaled == pytest.approx(4 * 2 ** 1.5, rel=1e-9)


def test_close_path_rejects_single_point():
    pts = point_set([[0.5, 0.5]])
    with pytest.raises(InputError):
        close_path(path_from_order(pts, (0,)), pts)


def test_close_then_reopen_recovers_cost(rng):
    pts = random_points(3, 9, 4)
    p = path_from_order(pts, tuple(rng.permutation(9)))
    t = close_path(p, pts)
    reopened = t.edges[:-1]
    assert [e.weight for e in reopened] == [e.weight for e in p.edges]


def test_cycle_to_matchings_square(square_corners):
    t = tour_from_order(square_corners, (0, 1, 2, 3))
    m1, m2 = cycle_to_matchings(t)
    assert sum(e.weight ** 2 for e in m1.edges) == pytest.approx(2.0)
    assert sum(e.weight ** 2 for e in m2.edges) == pytest.approx(2.0)
    assert m1.is_perfect(4) and m2.is_perfect(4)


def test_cycle_to_matchings_two_points():
    pts = point_set([[0.2, 0.2], [0.9, 0.4]])
    t = tour_from_order(pts, (0, 1))
    m1, m2 = cycle_to_matchings(t)
    d = t.edges[0].weight
    for m in (m1, m2):
        assert len(m.edges) == 1
        assert m.edges[0].weight == pytest.approx(d)


def test_cycle_to_matchings_conserves_terms(rng):
    pts = random_points(11, 8, 3)
    t = tour_from_order(pts, tuple(rng.permutation(8)))
    m1, m2 = cycle_to_matchings(t, k=3)
    merged = sorted(e.weight for e in m1.edges + m2.edges)
    assert merged == sorted(e.weight for e in t.edges)
    s_t = power_cost(t.edges, 3).unscaled
    s_1 = power_cost(m1.edges, 3).unscaled
    # alternating classes computed independently from the tour edge list
    even = power_cost(t.edges[0::2], 3).unscaled
    odd = power_cost(t.edges[1::2], 3).unscaled
    assert s_1 == pytest.approx(min(even, odd), rel=1e-12)
    assert s_1 <= s_t / 2 + 1e-12


def test_cycle_to_matchings_rejects_odd():
    pts = point_set([[0, 0], [1, 0], [0, 1]])
    with pytest.raises(InputError):
        cycle_to_matchings(tour_from_order(pts, (0, 1, 2)))


def test_validate_clean_tour(square_corners):
    t = tour_from_order(square_corners, (0, 2, 1, 3))
    assert validate(t, square_corners) == []


def test_validate_repeated_vertex(square_corners):
    t = tour_from_order(square_corners, (0, 1, 2, 3))
    bad = type(t)(order=(0, 3, 3, 2), edges=t.edges)
    msgs = validate(bad, square_corners)
    assert any("order not a permutation: vertex 3" in m for m in msgs)


def test_validate_degree_three():
    ps = PathSystem(8)
    ps.add_path_edge(7, 0)
    ps.add_path_edge(7, 1)
    ps.edge_pairs.append((7, 2))  # corrupt past the guard
    ps.neighbors[7].append(2)
    ps.neighbors[2].append(7)
    msgs = validate(ps, point_set(np.zeros((8, 2)), "unconstrained"))
    assert any("degree > 2 at vertex 7" in m for m in msgs)


def test_validate_matching_duplicate(square_corners):
    m = Matching((Edge(0, 1, 1.0), Edge(1, 2, 1.0)))
    msgs = validate(m, square_corners)
    assert any("vertex 1 matched twice" in m_ for m_ in msgs)


def test_validate_bad_weight(square_corners):
    t = tour_from_order(square_corners, (0, 1, 2, 3))
    bad_edges = (Edge(0, 1, 0.5),) + t.edges[1:]
    msgs = validate(type(t)(order=t.order, edges=bad_edges), square_corners)
    assert any("weight" in m for m in msgs)


def test_validate_tree(square_corners):
    t = tree_from_pairs(square_corners, [(0, 1), (1, 2), (2, 3)])
    assert validate(t, square_corners) == []
    cyclic = tree_from_pairs(square_corners, [(0, 1), (1, 2), (0, 2)])
    msgs = validate(cyclic, square_corners)
    assert any("cycle" in m for m in msgs)
    assert any("disconnected" in m for m in msgs)


def test_path_system_components_drop_by_one(rng):
    ps = PathSystem(10)
    comps = ps.component_count()
    assert comps == 10
    order = rng.permutation(10)
    for i in range(9):
        ps.add_path_edge(int(order[i]), int(order[i + 1]))
        assert ps.component_count() == comps - 1
        comps -= 1
    assert len(ps.paths()) == 1


def test_path_system_rejects_illegal_joins():
    ps = PathSystem(4)
    ps.add_path_edge(0, 1)
    with pytest.raises(InputError):
        ps.add_path_edge(0, 1)  # same component
    ps.add_path_edge(1, 2)
    with pytest.raises(InputError):
        ps.add_path_edge(0, 2)  # would close a cycle
    ps.add_path_edge(2, 3)
    with pytest.raises(InputError):
        ps.add_path_edge(1, 3)  # degree at 1 is already 2


def test_path_system_endpoints_track_merges():
    ps = PathSystem(5)
    ps.add_path_edge(1, 2)
    ps.add_path_edge(2, 3)
    ends = sorted(ps.endpoints().values())
    assert (1, 3) in ends or (3, 1) in [tuple(reversed(e)) for e in ends]
    singles = [e for e in ends if e[0] == e[1]]
    assert len(singles) == 2  # vertices 0 and 4


def test_serialization_shapes(square_corners):
    t = tour_from_order(square_corners, (0, 1, 2, 3))
    d = to_json_dict(t, square_corners, 2)
    assert d["type"] == "tour"
    assert d["order"] == [0, 1, 2, 3]
    assert d["cost"]["k"] == 2
    assert d["cost"]["S_k"] == pytest.approx(4.0)
    assert d["cost"]["s_k"] == pytest.approx(2.0)

    tree = tree_from_pairs(square_corners, [(0, 1), (1, 2), (2, 3)])
    d = to_json_dict(tree, square_corners, 2)
    assert d["type"] == "tree"
    assert d["edges"] == [[0, 1], [1, 2], [2, 3]]
