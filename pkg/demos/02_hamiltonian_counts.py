"""Hamiltonian accounting on the dodecahedron and its stacked-ring relatives.

Every maximal path that visits all twenty vertices once is a Hamiltonian
path; those whose last vertex connects back to the start also close into
Hamiltonian cycles.  The cycle count is the same from every start vertex:
rotating any found cycle re-roots it anywhere, so no start is special.
"""

from relgraph import (
    gen_cycle_sequence,
    gen_dodecahedron,
    search_report,
    traversal_invariant,
)

g = gen_dodecahedron()
res, stats = search_report(g, 1)
print("dodecahedron from vertex 1:")
print(f"  loops {res.loop_count}, breadth {res.breadth}")
print(f"  hamiltonian paths {stats.hamiltonian_paths}, cycles {stats.hamiltonian_cycles}")
print(f"  undirected cycles {stats.undirected_cycle_count} (each found once per direction)")

print()
counts = traversal_invariant(g)
print(f"cycle count per start vertex: {sorted(set(counts.values()))} across {len(counts)} starts")

print()
print("the same 3-regular ring family at smaller sizes (first/last ring k, middles 2k):")
print(f"{'k':>3} {'z':>3} {'n':>4} {'breadth':>9} {'HP':>5} {'HC':>5}")
for k, z in [(3, 2), (3, 3), (4, 3), (5, 3)]:
    ring = gen_cycle_sequence(k, z)
    r, s = search_report(ring, 1)
    print(f"{k:>3} {z:>3} {ring.n:>4} {r.breadth:>9} {s.hamiltonian_paths:>5} {s.hamiltonian_cycles:>5}")
