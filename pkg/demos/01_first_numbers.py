"""First contact: a handful of intersection numbers, two independent ways.

The closed formula needs only a small genus-independent coefficient
table, the mod-3-gated determinants Q and weighted Kostka numbers; the
recursion grinds down to the two seed values.  Both are exact and must
agree to the last digit.
"""

from wkintersect import DTable, tau, virasoro_tau

table = DTable()

examples = [
    (0, (0, 0, 0)),
    (0, (1, 0, 0, 0)),
    (1, (1,)),
    (1, (0, 0, 3)),
    (2, (4,)),
    (2, (2, 2, 1, 1, 0)),
    (3, (3, 3, 1, 1, 2)),
]

print("genus  indices            closed formula       recursion")
for g, d in examples:
    lhs = tau(g, d, table)
    rhs = virasoro_tau(g, d)
    mark = "ok" if lhs == rhs else "MISMATCH"
    print("%5d  %-18s %-20s %-18s %s" % (g, ",".join(map(str, d)), lhs, rhs, mark))

# the one-point tower has a famous closed form: 1 / (24^g g!)
import math

from wkintersect import Rat

print("\none-point tower <tau_{3g-2}>_g:")
for g in range(1, 9):
    v = virasoro_tau(g, (3 * g - 2,))
    assert v == Rat(1, 24 ** g * math.factorial(g))
    print("  g=%d: %s" % (g, v))

