#!/usr/bin/env python3
"""Converting embeddings to triangulated disks without deepening them.

The pipeline only adds edges: saturate inner faces, bridge components,
split repeated outer/inner walk vertices, then ear-cut long inner faces.
No vertex ever leaves the outer face, so the peel count cannot grow.
Closing the disk with the apex fan costs at most one extra peel.
"""

from onionpeel import (
    Embedding,
    gen_cycle,
    gen_random_kouter,
    is_triangulated_disk,
    is_triangulation,
    onion_peels,
    to_full_triangulation,
    to_triangulated_disk,
)


def show(name, emb):
    disk, trace = to_triangulated_disk(emb)
    print(f"{name}:")
    print(f"  peels {onion_peels(emb).k} -> {onion_peels(disk).k}, "
          f"edges {emb.edge_count} -> {disk.edge_count}, "
          f"disk: {is_triangulated_disk(disk)}")
    for u, v, stage in trace.added_edges:
        print(f"    + ({u},{v}) [{stage}]")


# The classic: a 4-cycle stays 1-outerplanar as a disk (one chord) but
# triangulating it fully forces K4, which is 2-outerplanar.
show("4-cycle", gen_cycle(4))
tri, trace = to_full_triangulation(gen_cycle(4))
print(f"  full triangulation: edges={tri.edge_count} "
      f"(K4), peels={onion_peels(tri).k}, "
      f"triangulation: {is_triangulation(tri)}")

# Two components and a pendant: connect across the outer region, then
# repair the repeated outer-walk vertices the bridge created.
two = Embedding(
    {0: [1, 2], 1: [2, 0], 2: [0, 1], 3: [4, 5], 4: [5, 3], 5: [3, 4]},
    [(0, 1), (3, 4)],
)
show("two disjoint triangles", two)

# A seeded random 3-ring instance.
show("random 3-ring (seed 11)", gen_random_kouter(3, 5, 11))
