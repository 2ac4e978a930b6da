"""How the two computation strategies scale with the genus.

The recursion's work grows quickly with g; the closed formula's per-value
cost is dominated by one weight-class sweep of gated determinants and a
single Kostka column, with the genus entering only through the weight
3g-3+n.  Timings are wall-clock medians of three runs with cold caches;
nothing here is asserted - the point is the shape of the curve.
"""

import time

from wkintersect import DTable, a_gn_oracle, r_max, tau, virasoro_tau
from wkintersect import intersect, oracle, sympoly

n = 3
g_max = 9
table = DTable()
table.ensure_upto(r_max(n), n, lambda g: a_gn_oracle(g, n))

print("n = %d, index (3g-3+n, 0, ..., 0) per genus" % n)
print("g     formula[s]   recursion[s]")
for g in range(1, g_max + 1):
    d = (3 * g - 3 + n,) + (0,) * (n - 1)
    tf, to = [], []
    for _ in range(3):
        sympoly.clear_caches()
        intersect.clear_q_cache()
        t0 = time.perf_counter()
        a = tau(g, d, table)
        tf.append(time.perf_counter() - t0)
        oracle.clear_memo()
        t0 = time.perf_counter()
        b = virasoro_tau(g, d)
        to.append(time.perf_counter() - t0)
        assert a == b
    print("%-5d %-12.6f %-12.6f" % (g, sorted(tf)[1], sorted(to)[1]))
