"""Layered partition: contour lines around a seed set.

Region one is the seed set; each next region is whatever one more arc can
newly reach.  With one seed on a symmetric instance the region index is the
shortest-path distance plus one, so the partition doubles as an unweighted
distance oracle.  Directed instances can strand vertices behind one-way
arcs; those are reported rather than forced into a region.
"""

from relgraph import (
    MultiTraversalRelation,
    gen_cycle,
    gen_grid,
    partition,
    region_distance,
)

grid = gen_grid(4, 5)
layers = partition(grid, {1})
print("4x5 grid from the corner:")
print(f"  regions {layers.t}, sizes {layers.sizes()}")
for i, region in enumerate(layers.regions, start=1):
    print(f"  region {i}: {sorted(region)}")

print()
ring = gen_cycle(9)
layers = partition(ring, {1})
print(f"9-cycle from one seed: sizes {layers.sizes()}")
print(f"  distance to vertex 5: {region_distance(layers, 5)}")
print(f"  distance to vertex 6: {region_distance(layers, 6)}")

print()
two_seeds = partition(grid, {1, 20})
print(f"grid from opposite corners: sizes {two_seeds.sizes()} (distance = nearest seed)")

print()
one_way = MultiTraversalRelation.from_arcs([(1, 2), (2, 3), (3, 4), (4, 2)])
layers = partition(one_way, {2})
print("directed instance from vertex 2:")
print(f"  sizes {layers.sizes()}, stranded {sorted(layers.stranded)} (vertex 1 sits behind a one-way arc)")
