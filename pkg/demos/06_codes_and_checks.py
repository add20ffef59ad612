"""Binary codes, packing checks, and the instance-level verifiers.

Cube-vertex point sets are binary codes: squared Euclidean distance is
Hamming distance.  Distance-based code size bounds therefore limit how
many long edges a greedy path can contain, and packing arguments limit
how expensive an MST can be.  These checkers make each such step of the
story testable on concrete instances.
"""

from powertour import (build_mst, closest_pair_bound_check, cube_vertex_subset,
                       greedy_edge_count_by_length, greedy_ham_path,
                       hamming_min_distance, max_pairwise_square_sum,
                       midball_reach_check, midball_reach_extremal_pair,
                       mst_ball_packing_check, singleton_check, uniform_cube)

print("== code-size bounds vs measured subsets of {0,1}^10 ==")
pts = cube_vertex_subset(10, 24, seed=3)
d = hamming_min_distance(pts)
sc = singleton_check(10, d, pts.n)
print(f"24 random vertices: min Hamming distance {d}")
print(f"size 24 <= 2^(k-d+1) = {sc.bound:.0f}: {sc.ok}"
      + (f";  sharpened 2^(k-1.5d+2) = {sc.improved_bound:.1f}: {sc.ok_improved}"
         if sc.improved_bound is not None else ""))

print("\n== long edges of a greedy path are scarce ==")
_path, trace = greedy_ham_path(pts)
for j in (2, 4, 6, 8):
    count = greedy_edge_count_by_length(trace, j)
    print(f"edges with |e|^2 >= {j}: {count}  (< 2^(k-j+1) = {2**(10-j+1)})")

print("\n== MST edge midballs never overlap ==")
pts = uniform_cube(4, 60, seed=5)
tree = build_mst(pts)
print(f"violating ball pairs on a 60-point MST: {mst_ball_packing_check(tree, pts)}")

print("\n== how far can an edge midball reach from the cube center? ==")
k = 25
u, v = midball_reach_extremal_pair(k)
lhs, rhs, ok = midball_reach_check(u, v)
print(f"extremal pair in [-1/2,1/2]^{k}: reach {lhs:.6f} = bound "
      f"(sqrt5/4)sqrt(k) = {rhs:.6f}")

print("\n== pair sums and the closest-pair bound ==")
val, wit = max_pairwise_square_sum(6)
print(f"max sum of squared gaps among 6 reals in [0,1]: {val} at {wit}")
pts = uniform_cube(8, 200, seed=6)
ok, pair, min_sq, bound = closest_pair_bound_check(pts, m=200)
print(f"200 points in [0,1]^8: closest pair {pair} at squared distance "
      f"{min_sq:.4f} <= {bound:.4f}")
