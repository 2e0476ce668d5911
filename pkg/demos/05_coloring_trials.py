"""The two randomized coloring heuristics, head to head.

Both are proper by construction and never spend more than max degree + 1
colours.  Whether they land on the optimum is luck of the seed, so the
interesting number is the frequency of the minimum over many trials.
"""

from collections import Counter

from relgraph import bogpc, boerc, gen_cycle_sequence, gen_dodecahedron, max_degree

TRIALS = 1000


def trial_table(g, label):
    print(f"{label} (n={g.n}, colour budget {max_degree(g) + 1}):")
    for name, algo in [("bogpc", bogpc), ("boerc", boerc)]:
        counts = Counter(algo(g, seed).k for seed in range(TRIALS))
        row = "  ".join(f"k={k}: {counts[k]:>4}" for k in sorted(counts))
        best = min(counts)
        print(f"  {name}:  {row}   p(min) = {counts[best] / TRIALS:.3f}")


trial_table(gen_dodecahedron(), "dodecahedron")
print()
# same vertex count, different ring layout: shape moves the odds, not the budget
for k, z in [(30, 3), (20, 4), (15, 5), (12, 6), (10, 7)]:
    trial_table(gen_cycle_sequence(k, z), f"rings k={k}, z={z}")
    print()
