#!/usr/bin/env python3
"""Branch decompositions of width at most 2k from rooted forests.

After disk conversion, a multi-source BFS from the outer cycle gives a
spanning forest of height at most k-1.  The duals of the non-forest,
non-outer edges form a tree on the inner faces; subdividing its arcs and
hanging one leaf per edge yields a branch decomposition whose every cut
is covered by two root paths plus one edge, so the width is at most
2(height+1) <= 2k, and the treewidth is at most 3k-1.
"""

from onionpeel import (
    build_branch_tree,
    build_dual_tree,
    build_rooted_forest,
    compute_width,
    decompose_pipeline,
    gen_counterexample,
    gen_nested_triangles,
    gen_wheel,
    to_triangulated_disk,
    verify_tree_cotree,
)

# Step by step on K4.
disk, _ = to_triangulated_disk(gen_wheel(3))
forest = build_rooted_forest(disk)
print("K4 forest: roots", sorted(forest.roots), "parents", dict(forest.parent))
dual = build_dual_tree(disk, forest)
print("dual tree: faces", dual.face_ids, "arcs", [(a, b) for a, b, _ in dual.arcs])
verify_tree_cotree(disk, forest)  # the tree-co-tree route agrees
bd = build_branch_tree(dual, disk, forest)
width, cuts = compute_width(bd)
print(f"branch tree: {len(bd.nodes)} nodes, width {width}")
for cut in cuts:
    print(f"  arc {cut.arc}: crossing {sorted(cut.crossing)}")

# The one-call pipeline, on instances of growing depth.
print("\npipeline certificates:")
for name, emb in [
    ("wheel(6)", gen_wheel(6)),
    ("nested triangles (k=4)", gen_nested_triangles(4)),
    ("counterexample gadget (k=3)", gen_counterexample(3)),
]:
    cert = decompose_pipeline(emb)
    print(f"  {name}: k={cert.peel_count} height={cert.forest_height} "
          f"width={cert.width} <= {cert.width_bound}, tw <= {cert.tw_bound}")
