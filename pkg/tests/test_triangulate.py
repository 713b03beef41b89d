import pytest

from onionpeel import (
    Embedding,
    add_edge_in_face,
    build_embedding,
    build_rooted_forest,
    connect_components,
    errors,
    gen_counterexample,
    gen_cycle,
    gen_k4_minus_edge,
    gen_nested_triangles,
    gen_path,
    gen_wheel,
    is_triangulated_disk,
    is_triangulation,
    onion_peels,
    repair_inner_cut_vertices,
    repair_outer_cut_vertices,
    saturate_inward_neighbors,
    to_full_triangulation,
    to_triangulated_disk,
    triangulate_inner_faces,
    validate_forest,
    verify_trace,
)


def two_triangles():
    return Embedding(
        {0: [1, 2], 1: [2, 0], 2: [0, 1], 3: [4, 5], 4: [5, 3], 5: [3, 4]},
        [(0, 1), (3, 4)],
    )


def bowtie():
    return Embedding(
        {0: [1, 2], 1: [2, 0], 2: [0, 1, 3, 4], 3: [4, 2], 4: [2, 3]}, [(0, 1)]
    )


def test_connect_two_triangles():
    joined = connect_components(two_triangles())
    assert joined.is_connected
    assert set(joined.edges) - set(two_triangles().edges) == {(0, 3)}
    assert joined.outer_vertices == two_triangles().outer_vertices


def test_connect_connected_noop():
    k4 = gen_wheel(3)
    assert connect_components(k4) == k4


def test_connect_absorbs_isolated_vertex():
    emb = build_embedding(
        [0, 1, 2, 7], {0: [1, 2], 1: [2, 0], 2: [0, 1]}, [(0, 1)]
    )
    joined = connect_components(emb)
    assert joined.is_connected and joined.has_edge(0, 7)
    assert 7 in joined.outer_vertices


def test_outer_repair_bowtie():
    fixed = repair_outer_cut_vertices(bowtie())
    walk = fixed.outer_faces[0]
    assert walk.is_simple
    assert set(fixed.edges) - set(bowtie().edges) == {(1, 3)}
    assert fixed.outer_vertices == bowtie().outer_vertices


def test_outer_repair_path_becomes_triangle():
    fixed = repair_outer_cut_vertices(gen_path(3))
    assert fixed.edges == ((0, 1), (0, 2), (1, 2))
    assert fixed.outer_faces[0].is_simple


def test_outer_repair_simple_noop():
    c5 = gen_cycle(5)
    assert repair_outer_cut_vertices(c5) == c5


def test_inner_repair_pendant_inside_square():
    sq = Embedding(
        {0: [1, 4, 3], 1: [2, 0], 2: [3, 1], 3: [0, 2], 4: [0]}, [(0, 1)]
    )
    assert any(not f.is_simple for f in sq.inner_faces)
    fixed = repair_inner_cut_vertices(sq)
    assert all(f.is_simple for f in fixed.inner_faces)
    assert set(fixed.edges) - set(sq.edges) == {(3, 4)}


def test_inner_repair_disk_noop():
    disk = gen_k4_minus_edge()
    assert repair_inner_cut_vertices(disk) == disk


def test_ears_square():
    c4 = gen_cycle(4)
    done = triangulate_inner_faces(c4)
    assert all(len(f) == 3 for f in done.inner_faces)
    assert done.edge_count == 5


def test_ears_avoid_existing_chord():
    c5 = gen_cycle(5)
    withchord = add_edge_in_face(c5, 0, 2, c5.outer_faces[0])
    done = triangulate_inner_faces(withchord)
    assert all(len(f) == 3 for f in done.inner_faces)
    assert set(done.edges) - set(withchord.edges) == {(1, 3), (1, 4), (2, 4)}
    assert is_triangulated_disk(done)


def test_ears_triangulated_noop():
    disk = gen_k4_minus_edge()
    assert triangulate_inner_faces(disk) == disk


def test_disk_four_cycle_is_k4_minus_edge():
    disk, trace = to_triangulated_disk(gen_cycle(4))
    assert disk.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))
    assert onion_peels(disk).k == 1
    assert trace.added_edges == ((0, 2, "saturate"),)


def test_disk_already_disk_noop():
    t3 = gen_nested_triangles(3)
    disk, trace = to_triangulated_disk(t3)
    assert disk == t3 and trace.added_edges == ()


def test_disk_two_triangles():
    disk, trace = to_triangulated_disk(two_triangles())
    assert is_triangulated_disk(disk)
    assert onion_peels(disk).k == 1
    stages = [s for _, _, s in trace.added_edges]
    assert stages[0] == "connect"


def test_disk_too_small():
    with pytest.raises(errors.TooSmall):
        to_triangulated_disk(gen_path(2))
    with pytest.raises(errors.TooSmall):
        to_full_triangulation(gen_path(2))


def test_disk_corpus_contract(corpus):
    for label, emb in corpus:
        disk, trace = to_triangulated_disk(emb)
        assert is_triangulated_disk(disk), label
        assert disk.outer_vertices == emb.outer_vertices, label
        assert onion_peels(disk).k <= onion_peels(emb).k, label
        redo, retrace = to_triangulated_disk(disk)
        assert redo == disk and retrace.added_edges == (), label


def test_disk_trace_replay(small_corpus):
    for label, emb in small_corpus:
        _, trace = to_triangulated_disk(emb)
        verify_trace(trace)
        _, trace = to_full_triangulation(emb)
        verify_trace(trace, full=True)


def test_forest_survives_disk_conversion(corpus):
    for label, emb in corpus:
        sat = saturate_inward_neighbors(emb)
        forest = build_rooted_forest(sat)
        disk, _ = to_triangulated_disk(emb)
        validate_forest(disk, forest)  # same forest, same height, still rooted
        assert build_rooted_forest(sat).height == forest.height, label


def test_triangulate_four_cycle_is_k4():
    tri, trace = to_full_triangulation(gen_cycle(4))
    assert tri.edge_count == 6 and is_triangulation(tri)
    assert onion_peels(tri).k == 2
    assert trace.added_edges == ((0, 2, "saturate"), (1, 3, "apex"))


def test_triangulate_triangle_noop():
    t = gen_cycle(3)
    tri, trace = to_full_triangulation(t)
    assert tri == t and trace.added_edges == ()
    assert onion_peels(tri).k == 1


def test_triangulate_counterexample_hits_k_plus_one():
    g = gen_counterexample(2)
    tri, _ = to_full_triangulation(g)
    assert is_triangulation(tri)
    assert onion_peels(tri).k == 3


def test_triangulate_corpus_contract(corpus):
    for label, emb in corpus:
        tri, trace = to_full_triangulation(emb)
        assert is_triangulation(tri), label
        assert onion_peels(tri).k <= onion_peels(emb).k + 1, label
        added = {(u, v) for u, v, _ in trace.added_edges}
        assert set(tri.edges) == set(emb.edges) | added, label
        assert len(added) == len(trace.added_edges), label


def test_stages_only_add_edges(corpus):
    for label, emb in corpus:
        disk, trace = to_triangulated_disk(emb)
        assert disk.vertices == emb.vertices, label
        assert set(emb.edges) <= set(disk.edges), label
        stage_names = {s for _, _, s in trace.added_edges}
        assert stage_names <= {"saturate", "connect", "outer-cut", "inner-cut", "ear"}, label
