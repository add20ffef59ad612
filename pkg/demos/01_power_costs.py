"""Power costs and the named bounds.

The cost of a graph over points in [0,1]^k is S_k = sum |e|^k; the scaled
form s_k = S_k^(1/k) is what the dimension-dependent bounds talk about.
This demo shows the log-domain accumulation surviving exponents far past
float range, and evaluates the bound table for a few dimensions.
"""

import math

from powertour import named_bounds, power_cost_from_weights

print("== unit square, four sides, k = 2 ==")
cost = power_cost_from_weights([1, 1, 1, 1], 2)
print(f"S_2 = {cost.unscaled}, s_2 = {cost.scaled}")

print("\n== the same four edges under k = 1000 ==")
cost = power_cost_from_weights([math.sqrt(1000)] * 4, 1000)
print(f"S_k overflows the float range: {cost.overflow} (recorded as inf)")
print(f"but the scaled cost is exact: s_k = {cost.scaled:.6f}"
      f" = 4^(1/1000) * sqrt(1000)")

print("\n== named scaled-cost bounds ==")
print(f"{'k':>3} {'lower 2^(1/k)sqrt(k)':>22} {'certified upper':>17} {'path (conjectured)':>19}")
for k in (2, 3, 4, 8, 16, 32):
    nb = named_bounds(k, n=100)
    print(f"{k:>3} {nb.cycle_lower_conjectured:>22.4f} "
          f"{nb.cycle_upper_improved:>17.4f} {nb.path_conjectured:>19.4f}")

print("\nAt k = 2 the story is closed: every point set admits a tour with")
print("S_2 <= 4 (s_2 <= 2), and three different sets attain it exactly.")
print("At k = 3 the lower bound jumps to 2^(7/6) =",
      f"{named_bounds(3, 4).dim3_cycle_lower:.4f},",
      "witnessed by a 4-point binary code (see demo 05).")
