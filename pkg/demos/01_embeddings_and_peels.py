#!/usr/bin/env python3
"""Embeddings, face tracing, and onion peels.

A combinatorial embedding is just a cyclic neighbor order per vertex plus
a choice of outer face.  This script builds a few embeddings by hand and
with the generators, traces their faces, and peels them layer by layer.
"""

from onionpeel import (
    build_embedding,
    check_inward_face,
    format_epg,
    gen_nested_triangles,
    gen_wheel,
    onion_peels,
    remove_vertices,
    to_dot,
)

# The smallest interesting embedding: a triangle.  Darts are ordered
# vertex pairs; the outer dart (0, 1) picks which of the two face walks
# is the unbounded one.
triangle = build_embedding([0, 1, 2], {0: [1, 2], 1: [2, 0], 2: [0, 1]}, [(0, 1)])
print("triangle faces:")
for f in triangle.faces:
    print("  ", f.vertices, "(outer)" if f.is_outer else "(inner)")

# K4 drawn with an outer triangle: the hub vertex 3 is one layer deep.
k4 = gen_wheel(3)
print("\nK4 peels:", [sorted(layer) for layer in onion_peels(k4).layers])

# Peeling is literally iterated deletion of the outer vertices.  Watch the
# outer region get remarked after each round.
emb = gen_nested_triangles(3)
print("\npeeling three nested triangles:")
round_no = 0
while emb.vertex_count:
    round_no += 1
    layer = sorted(emb.outer_vertices)
    print(f"  round {round_no}: outer = {layer}")
    emb = remove_vertices(emb, layer)

# Every vertex one layer deep sees the layer above it through one of its
# faces; the witness report lists those faces.
t3 = gen_nested_triangles(3)
report = check_inward_face(t3, onion_peels(t3))
print("\ninward-face witnesses (vertex -> face indices):")
for v in sorted(report):
    print(f"  {v}: {report[v]}")

# Embeddings serialize to EPG text and DOT.
print("\nEPG for the triangle:")
print(format_epg(triangle), end="")
print("\nDOT for K4:")
print(to_dot(k4), end="")
