"""Planar constructions with tight squared-length budgets.

All costs here are sums of squared edge lengths (exponent 2).  The core
primitive is the extended path through a right triangle: a path between
the two hypotenuse endpoints, visiting every input point, whose squared
cost never exceeds the squared hypotenuse.  It recurses along the
altitude through the right-angle vertex; the two sub-paths are
concatenated at that vertex and the junction is removed by a shortcut,
which is valid because the angle spanned there never exceeds 90 degrees
(so the chord is no longer than the two replaced edges, squared).

Stacked on top of it:

* extended paths through non-obtuse triangles with budget a^2 + b^2 and
  cycles with budget a^2 + b^2 + c^2,
* extended paths through the unit square minus the inner triangle over
  one side (budget 3),
* closed tours through the unit square with budget 4, obtained by
  splitting along a diagonal and splicing the two triangle paths.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .errors import CertificateError, InputError
from .geometry import PointSet, euclidean_distance
from .structures import Tour, tour_from_order

SHORTCUT_DOT_TOL = 1e-12
COST_REL_TOL = 1e-9
COST_ABS_TOL = 1e-12


def shortcut_ok(p, q, r) -> bool:
    """True iff the angle at q in the walk p -> q -> r is at most 90 degrees,
    certifying |pr|^2 <= |pq|^2 + |qr|^2.  Degenerate (zero) edges count as
    right angles, hence True."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    if p.shape != q.shape or q.shape != r.shape or p.shape[-1] != 2:
        raise InputError("shortcut test expects 2-dimensional points")
    return float(np.dot(p - q, r - q)) >= -SHORTCUT_DOT_TOL


@dataclass(frozen=True)
class RightTriangle:
    """Right triangle with the right angle at C; sides a <= b <= c = |AB|."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=np.float64)
        B = np.asarray(self.B, dtype=np.float64)
        C = np.asarray(self.C, dtype=np.float64)
        if A.shape != (2,) or B.shape != (2,) or C.shape != (2,):
            raise InputError("triangle vertices must be planar points")
        a2 = float(np.dot(B - C, B - C))
        b2 = float(np.dot(A - C, A - C))
        c2 = float(np.dot(A - B, A - B))
        if abs(a2 + b2 - c2) > 1e-9 * max(c2, 1e-30):
            raise InputError("not a right angle at C")
        object.__setattr__(self, "A", _frozen(A))
        object.__setattr__(self, "B", _frozen(B))
        object.__setattr__(self, "C", _frozen(C))

    @property
    def side_a(self) -> float:
        return min(euclidean_distance(self.B, self.C), euclidean_distance(self.A, self.C))

    @property
    def side_b(self) -> float:
        return max(euclidean_distance(self.B, self.C), euclidean_distance(self.A, self.C))

    @property
    def side_c(self) -> float:
        return euclidean_distance(self.A, self.B)

    @classmethod
    def from_vertices(cls, p, q, r) -> "RightTriangle":
        """Label three vertices so the right angle sits at C."""
        pts = [np.asarray(x, dtype=np.float64) for x in (p, q, r)]
        sq = [float(np.dot(pts[(i + 1) % 3] - pts[i], pts[(i + 2) % 3] - pts[i]))
              for i in range(3)]
        c_idx = min(range(3), key=lambda i: abs(sq[i]))
        C = pts[c_idx]
        A, B = pts[(c_idx + 1) % 3], pts[(c_idx + 2) % 3]
        return cls(A, B, C)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


def _planar_coords(points) -> np.ndarray:
    """Coerce a PointSet or array-like (possibly empty) to an (m, 2) array."""
    if isinstance(points, PointSet):
        coords = points.coords
    else:
        coords = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise InputError("planar construction requires 2-dimensional points")
    return coords


@dataclass(frozen=True)
class ExtendedPath:
    """A path between two anchor locations (possibly not input points)
    visiting every input point exactly once."""

    start: np.ndarray
    end: np.ndarray
    order: tuple[int, ...]

    def chain(self, points) -> np.ndarray:
        coords = _planar_coords(points)
        mid = coords[list(self.order)] if self.order else np.empty((0, 2))
        return np.vstack([self.start[None, :], mid, self.end[None, :]])

    def cost_sq(self, points) -> float:
        ch = self.chain(points)
        diffs = np.diff(ch, axis=0)
        return float(np.einsum("ij,ij->", diffs, diffs))


def _sq(a, b) -> float:
    d = a - b
    return float(np.dot(d, d))


def _assert_budget(cost: float, budget: float) -> None:
    if cost > budget * (1.0 + COST_REL_TOL) + COST_ABS_TOL:
        raise CertificateError(f"path cost {cost} exceeds budget {budget}")


def _rt_seq(coords, A, B, C, idx: list[int]) -> tuple[list[int], float]:
    """Extended-path order through the points ``idx`` of a right triangle
    (right angle at C, hypotenuse AB), plus the chain cost A -> ... -> B.

    ``coords`` is a list of (x, y) tuples; A, B, C are (x, y) tuples.  The
    inductive budget cost <= |AB|^2 is asserted at every level.  Points on
    the dividing altitude go to the A-side subtriangle.  Callers collapse
    coincident points beforehand (they are threaded consecutively at zero
    cost when re-expanded).
    """
    ax, ay = A
    bx, by = B
    abx = bx - ax
    aby = by - ay
    c2 = abx * abx + aby * aby
    if not idx:
        return [], c2
    if len(idx) == 1:
        px, py = coords[idx[0]]
        cost = ((px - ax) ** 2 + (py - ay) ** 2
                + (bx - px) ** 2 + (by - py) ** 2)
        _assert_budget(cost, c2)
        return list(idx), cost
    if c2 <= 1e-30:
        # collapsed triangle: every point coincides with the anchors
        seq = list(idx)
        cost = _chain_cost(coords, A, B, seq)
        _assert_budget(cost, max(c2, 0.0))
        return seq, cost
    cx, cy = C
    # altitude foot from C onto AB
    t = ((cx - ax) * abx + (cy - ay) * aby) / c2
    hx = ax + t * abx
    hy = ay + t * aby
    height_sq = (cx - hx) ** 2 + (cy - hy) ** 2
    if height_sq <= 1e-18 * c2:
        # degenerate (collinear) triangle: sweep along the segment
        seq = sorted(idx, key=lambda i: ((coords[i][0] - ax) * abx
                                         + (coords[i][1] - ay) * aby, i))
        cost = _chain_cost(coords, A, B, seq)
        _assert_budget(cost, c2)
        return seq, cost
    left: list[int] = []
    right: list[int] = []
    for i in idx:
        px, py = coords[i]
        if (px - hx) * abx + (py - hy) * aby <= 0.0:
            left.append(i)  # A's side of the altitude line, ties included
        else:
            right.append(i)
    H = (hx, hy)
    seq_l, cost_l = _rt_seq(coords, A, C, H, left)
    seq_r, cost_r = _rt_seq(coords, C, B, H, right)
    ux, uy = coords[seq_l[-1]] if seq_l else A
    wx, wy = coords[seq_r[0]] if seq_r else B
    if (ux - cx) * (wx - cx) + (uy - cy) * (wy - cy) < -SHORTCUT_DOT_TOL:
        raise CertificateError("shortcut angle exceeds 90 degrees at a junction")
    cost = (cost_l + cost_r
            - ((ux - cx) ** 2 + (uy - cy) ** 2)
            - ((cx - wx) ** 2 + (cy - wy) ** 2)
            + ((ux - wx) ** 2 + (uy - wy) ** 2))
    _assert_budget(cost, c2)
    return seq_l + seq_r, cost


def _chain_cost(coords, A, B, seq: list[int]) -> float:
    ch = [A] + [coords[i] for i in seq] + [B]
    return float(sum((ch[i][0] - ch[i + 1][0]) ** 2 + (ch[i][1] - ch[i + 1][1]) ** 2
                     for i in range(len(ch) - 1)))


def _with_recursion_room(fn):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 100_000))
    try:
        return fn()
    finally:
        sys.setrecursionlimit(old)


def _point_in_triangle(p, v0, v1, v2, tol: float) -> bool:
    # barycentric sign test with absolute slack scaled by the triangle
    mat = np.array([[v1[0] - v0[0], v2[0] - v0[0]],
                    [v1[1] - v0[1], v2[1] - v0[1]]])
    det = float(np.linalg.det(mat))
    if abs(det) < 1e-30:
        # degenerate triangle: fall back to segment distance
        return _dist_to_segment(p, v0, v1) <= tol or _dist_to_segment(p, v0, v2) <= tol
    rhs = np.asarray(p, dtype=np.float64) - v0
    lam = np.linalg.solve(mat, rhs)
    l1, l2 = float(lam[0]), float(lam[1])
    return l1 >= -tol and l2 >= -tol and l1 + l2 <= 1.0 + tol


def _dist_to_segment(p, a, b) -> float:
    ab = b - a
    denom = float(np.dot(ab, ab))
    if denom == 0.0:
        return float(np.linalg.norm(p - a))
    t = min(1.0, max(0.0, float(np.dot(p - a, ab)) / denom))
    return float(np.linalg.norm(p - (a + t * ab)))


def right_triangle_path(tri: RightTriangle, points) -> ExtendedPath:
    """Extended path from A to B through all points, cost at most c^2.

    ``points`` is a PointSet or an array-like of planar coordinates (an
    empty array yields the bare hypotenuse edge).  Every point must lie
    inside or on the triangle (tolerance 1e-9).
    """
    coords = _planar_coords(points)
    for i in range(coords.shape[0]):
        if not _point_in_triangle(coords[i], tri.A, tri.B, tri.C, 1e-9):
            raise InputError(f"point {i} lies outside the triangle")
    uniq_idx, expand = _collapse_duplicates(coords)
    pts = _tuples(coords)
    seq, _cost = _with_recursion_room(
        lambda: _rt_seq(pts, _t2(tri.A), _t2(tri.B), _t2(tri.C), uniq_idx))
    path = ExtendedPath(tri.A, tri.B, tuple(_expand(seq, expand)))
    _assert_budget(path.cost_sq(coords), _sq(tri.A, tri.B))
    return path


def _tuples(coords: np.ndarray) -> list[tuple[float, float]]:
    return [(float(x), float(y)) for x, y in coords]


def _t2(arr) -> tuple[float, float]:
    return (float(arr[0]), float(arr[1]))


def _collapse_duplicates(coords: np.ndarray):
    """Representative index per distinct location + expansion lists."""
    seen: dict[bytes, int] = {}
    expand: dict[int, list[int]] = {}
    reps: list[int] = []
    for i in range(coords.shape[0]):
        key = coords[i].tobytes()
        if key in seen:
            expand[seen[key]].append(i)
        else:
            seen[key] = i
            expand[i] = [i]
            reps.append(i)
    return reps, expand


def _expand(seq: list[int], expand: dict[int, list[int]]) -> list[int]:
    out: list[int] = []
    for i in seq:
        out.extend(expand[i])
    return out


def _longest_side_labels(v0, v1, v2):
    """Vertices relabeled (P, Q, R) with PQ the longest side, R opposite."""
    pts = [np.asarray(x, dtype=np.float64) for x in (v0, v1, v2)]
    sides = [(_sq(pts[(i + 1) % 3], pts[(i + 2) % 3]), i) for i in range(3)]
    _c2, i = max(sides)
    return pts[(i + 1) % 3], pts[(i + 2) % 3], pts[i]


def _is_obtuse(v0, v1, v2, tol: float = 1e-12) -> bool:
    pts = [np.asarray(x, dtype=np.float64) for x in (v0, v1, v2)]
    for i in range(3):
        d = float(np.dot(pts[(i + 1) % 3] - pts[i], pts[(i + 2) % 3] - pts[i]))
        scale = max(_sq(pts[(i + 1) % 3], pts[i]), _sq(pts[(i + 2) % 3], pts[i]), 1e-30)
        if d < -tol * scale:
            return True
    return False


def non_obtuse_path(tri, points) -> ExtendedPath:
    """Extended path between the endpoints of the longest side of a
    non-obtuse triangle, with squared cost at most a^2 + b^2.

    ``tri`` is any representation of three vertices (sequence of three
    planar points).  Splits along the altitude onto the longest side and
    shortcuts the apex junction.
    """
    v0, v1, v2 = _triangle_vertices(tri)
    if _is_obtuse(v0, v1, v2):
        raise InputError("triangle must be non-obtuse")
    P, Q, R = _longest_side_labels(v0, v1, v2)
    coords = _planar_coords(points)
    for i in range(coords.shape[0]):
        if not _point_in_triangle(coords[i], v0, v1, v2, 1e-9):
            raise InputError(f"point {i} lies outside the triangle")
    pq = Q - P
    c2 = _sq(P, Q)
    t = float(np.dot(R - P, pq)) / c2
    H = P + t * pq
    uniq_idx, expand = _collapse_duplicates(coords)
    side = (coords[uniq_idx] - H) @ pq
    left = [i for i, s in zip(uniq_idx, side) if s <= 0.0]
    right = [i for i, s in zip(uniq_idx, side) if s > 0.0]
    pts = _tuples(coords)
    tP, tQ, tR, tH = _t2(P), _t2(Q), _t2(R), _t2(H)
    seq_l, _ = _with_recursion_room(lambda: _rt_seq(pts, tP, tR, tH, left))
    seq_r, _ = _with_recursion_room(lambda: _rt_seq(pts, tR, tQ, tH, right))
    u = coords[seq_l[-1]] if seq_l else P
    w = coords[seq_r[0]] if seq_r else Q
    if float(np.dot(u - R, w - R)) < -SHORTCUT_DOT_TOL:
        raise CertificateError("shortcut angle exceeds 90 degrees at the apex")
    path = ExtendedPath(P, Q, tuple(_expand(seq_l + seq_r, expand)))
    budget = _sq(P, R) + _sq(R, Q)  # = a^2 + b^2
    _assert_budget(path.cost_sq(coords), budget)
    return path


def non_obtuse_cycle(tri, points: PointSet) -> Tour:
    """Hamiltonian cycle in a non-obtuse triangle, squared cost at most
    a^2 + b^2 + c^2."""
    if points.n < 2:
        raise InputError("need at least 2 points for a cycle")
    path = non_obtuse_path(tri, points)
    tour = tour_from_order(points, path.order)
    v0, v1, v2 = _triangle_vertices(tri)
    budget = _sq(v0, v1) + _sq(v1, v2) + _sq(v2, v0)
    _assert_budget(sum(e.weight ** 2 for e in tour.edges), budget)
    return tour


def _triangle_vertices(tri):
    if isinstance(tri, RightTriangle):
        return tri.A, tri.B, tri.C
    arr = np.asarray(tri, dtype=np.float64)
    if arr.shape != (3, 2):
        raise InputError("triangle must be three planar vertices")
    return arr[0], arr[1], arr[2]


_SIDE_CORNERS = {
    "bottom": (np.array([0.0, 0.0]), np.array([1.0, 0.0])),
    "top": (np.array([1.0, 1.0]), np.array([0.0, 1.0])),
    "left": (np.array([0.0, 1.0]), np.array([0.0, 0.0])),
    "right": (np.array([1.0, 0.0]), np.array([1.0, 1.0])),
}

_SQUARE_CENTER = np.array([0.5, 0.5])


def _side_isometry(side: str):
    """Rotation of the unit square mapping ``side`` onto the bottom side."""
    if side not in _SIDE_CORNERS:
        raise InputError(f"unknown square side {side!r}")
    turns = {"bottom": 0, "right": 1, "top": 2, "left": 3}[side]
    if turns == 0:
        identity = lambda xy: np.asarray(xy, dtype=np.float64)
        return identity, identity

    # rotate by -90 degrees ``turns`` times about the center
    def fwd(xy: np.ndarray) -> np.ndarray:
        p = np.asarray(xy, dtype=np.float64) - _SQUARE_CENTER
        for _ in range(turns):
            p = np.stack([p[..., 1], -p[..., 0]], axis=-1)
        return p + _SQUARE_CENTER

    def inv(xy: np.ndarray) -> np.ndarray:
        p = np.asarray(xy, dtype=np.float64) - _SQUARE_CENTER
        for _ in range((4 - turns) % 4):
            p = np.stack([p[..., 1], -p[..., 0]], axis=-1)
        return p + _SQUARE_CENTER

    return fwd, inv


def envelope_path(points, side: str = "bottom") -> ExtendedPath:
    """Extended path through the unit square minus the open triangle
    spanned by the square's center and one side, squared cost at most 3.

    Anchors are the two corners of the excluded side.  Points must lie in
    the closed region (square minus open center triangle).
    """
    if side not in _SIDE_CORNERS:
        raise InputError(f"unknown square side {side!r}")
    fwd, inv = _side_isometry(side)
    coords = fwd(_planar_coords(points))  # canonical frame: excluded side at the bottom
    tol = 1e-9
    if coords.size and (coords.min() < -tol or coords.max() > 1.0 + tol):
        raise InputError("points must lie in the unit square")
    ca = np.array([0.0, 0.0])
    cb = np.array([1.0, 0.0])
    c_far = np.array([1.0, 1.0])
    corner = np.array([0.0, 1.0])
    # the closed region is exactly the union of the two right triangles
    for i in range(coords.shape[0]):
        if not (_point_in_triangle(coords[i], ca, corner, c_far, tol)
                or _point_in_triangle(coords[i], c_far, cb, _SQUARE_CENTER, tol)):
            raise InputError(f"point {i} lies inside the excluded triangle")
    # split along the diagonal ca -> c_far; the center lies on it
    side_val = coords[:, 1] - coords[:, 0]  # > 0 above the diagonal
    uniq_idx, expand = _collapse_duplicates(coords)
    upper = [i for i in uniq_idx if side_val[i] >= 0.0]
    lower = [i for i in uniq_idx if side_val[i] < 0.0]
    pts = _tuples(coords)
    seq_l, _ = _with_recursion_room(
        lambda: _rt_seq(pts, (0.0, 0.0), (1.0, 1.0), (0.0, 1.0), upper))
    seq_r, _ = _with_recursion_room(
        lambda: _rt_seq(pts, (1.0, 1.0), (1.0, 0.0), (0.5, 0.5), lower))
    u = coords[seq_l[-1]] if seq_l else ca
    w = coords[seq_r[0]] if seq_r else cb
    if float(np.dot(u - c_far, w - c_far)) < -SHORTCUT_DOT_TOL:
        raise CertificateError("shortcut angle exceeds 90 degrees at the far corner")
    order = tuple(_expand(seq_l + seq_r, expand))
    path = ExtendedPath(inv(ca), inv(cb), order)
    _assert_budget(path.cost_sq(_planar_coords(points)), 3.0)
    return path


def newman_square_tour(points: PointSet, diagonal: str = "main") -> Tour:
    """Closed tour through n >= 2 points of the unit square with S_2 <= 4.

    Splits the square along a diagonal into two right triangles, builds
    both extended paths along the shared diagonal, concatenates them into
    a closed chain and shortcuts the two (virtual) diagonal endpoints.
    Points exactly on the diagonal belong to the lower triangle.
    """
    if points.k != 2:
        raise InputError("the square tour requires 2-dimensional points")
    if points.n < 2:
        raise InputError("need at least 2 points")
    coords = points.coords
    tol = 1e-9
    if coords.min() < -tol or coords.max() > 1.0 + tol:
        raise InputError("points must lie in the unit square")
    if diagonal == "main":
        work = coords
    elif diagonal == "anti":
        work = np.column_stack([1.0 - coords[:, 0], coords[:, 1]])
    else:
        raise InputError(f"unknown diagonal {diagonal!r}")

    j0 = np.array([0.0, 0.0])
    j1 = np.array([1.0, 1.0])
    uniq_idx, expand = _collapse_duplicates(work)
    low = [i for i in uniq_idx if work[i, 1] - work[i, 0] <= 0.0]  # ties: lower
    up = [i for i in uniq_idx if work[i, 1] - work[i, 0] > 0.0]
    pts = _tuples(work)
    seq_low, _ = _with_recursion_room(
        lambda: _rt_seq(pts, (0.0, 0.0), (1.0, 1.0), (1.0, 0.0), low))
    seq_up, _ = _with_recursion_room(
        lambda: _rt_seq(pts, (1.0, 1.0), (0.0, 0.0), (0.0, 1.0), up))

    # cyclic chain J0 -> seq_low -> J1 -> seq_up -> (J0); shortcut the
    # virtual junctions against their current cyclic neighbors
    u1 = work[seq_low[-1]] if seq_low else j0
    w1 = work[seq_up[0]] if seq_up else j0
    if float(np.dot(u1 - j1, w1 - j1)) < -SHORTCUT_DOT_TOL:
        raise CertificateError("shortcut angle exceeds 90 degrees at a corner")
    u0 = work[seq_up[-1]] if seq_up else (work[seq_low[-1]] if seq_low else j1)
    w0 = work[seq_low[0]] if seq_low else (work[seq_up[0]] if seq_up else j1)
    if float(np.dot(u0 - j0, w0 - j0)) < -SHORTCUT_DOT_TOL:
        raise CertificateError("shortcut angle exceeds 90 degrees at a corner")

    order = _expand(seq_low + seq_up, expand)
    tour = tour_from_order(points, order)
    _assert_budget(sum(e.weight ** 2 for e in tour.edges), 4.0)
    return tour
