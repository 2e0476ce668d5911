"""Exhaustive search on complete graphs, and the constant hiding in the ratio.

An exhaustive equivalent-visiting search from one vertex of K_n expands
breadth (n-1)! maximal paths.  Counting loop iterations gives the series
1 + (n-1) + (n-1)(n-2) + ... + (n-1)!, and dividing by the breadth produces
a truncated series for e.  Watching the ratio column converge is the fastest
sanity check that the engine explores exactly the right tree.
"""

import math

from relgraph import gen_complete, obots_search

print(f"{'n':>3} {'loops':>10} {'breadth':>10} {'ratio':>14} {'|ratio - e|':>12}")
for n in range(3, 10):
    res = obots_search(gen_complete(n), 1, counts_only=True)
    ratio = res.loop_count / res.breadth
    print(f"{n:>3} {res.loop_count:>10} {res.breadth:>10} {ratio:>14.9f} {abs(ratio - math.e):>12.2e}")

print()
print("The same counts in closed form, as a cross-check:")
n = 9
series = sum(math.perm(n - 1, k) for k in range(n))
print(f"  sum of falling factorials for n=9: {series}")
print(f"  engine loop count for n=9:         {obots_search(gen_complete(9), 1, counts_only=True).loop_count}")
