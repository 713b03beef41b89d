import pytest

from onionpeel import (
    RootedForest,
    build_rooted_forest,
    check_inward_face,
    errors,
    gen_counterexample,
    gen_cycle,
    gen_nested_triangles,
    gen_wheel,
    onion_peels,
    remove_vertices,
    saturate_inward_neighbors,
    verify_forest_bound,
)


def test_peels_triangle():
    peels = onion_peels(gen_cycle(3))
    assert peels.k == 1 and peels.layers == (frozenset({0, 1, 2}),)


def test_peels_k4():
    peels = onion_peels(gen_wheel(3))
    assert peels.layers == (frozenset({0, 1, 2}), frozenset({3}))


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_peels_nested_triangles(i):
    peels = onion_peels(gen_nested_triangles(i))
    assert peels.k == i
    assert all(len(layer) == 3 for layer in peels.layers)


def test_peels_match_iterated_removal(small_corpus):
    for label, emb in small_corpus:
        layers = []
        current = emb
        while current.vertex_count:
            layers.append(current.outer_vertices)
            current = remove_vertices(current, current.outer_vertices)
        assert tuple(layers) == onion_peels(emb).layers, label


def test_peels_partition_vertices(corpus):
    for label, emb in corpus:
        peels = onion_peels(emb)
        seen = [v for layer in peels.layers for v in layer]
        assert sorted(seen) == list(emb.vertices), label
        assert all(layer for layer in peels.layers), label


def test_check_inward_face_k4():
    k4 = gen_wheel(3)
    report = check_inward_face(k4, onion_peels(k4))
    assert set(report) == {3}
    # all three incident triangles of the hub touch the rim
    assert len(report[3]) == 3


def test_check_inward_face_nested():
    t2 = gen_nested_triangles(2)
    report = check_inward_face(t2, onion_peels(t2))
    assert set(report) == {0, 1, 2}
    assert all(report[v] for v in report)


def test_check_inward_face_outerplanar_is_empty():
    c5 = gen_cycle(5)
    assert check_inward_face(c5, onion_peels(c5)) == {}


def test_check_inward_face_all_corpus(corpus):
    for label, emb in corpus:
        peels = onion_peels(emb)
        report = check_inward_face(emb, peels)
        deep = {v for layer in peels.layers[1:] for v in layer}
        assert set(report) == deep, label


def test_saturate_triangle_noop():
    t = gen_cycle(3)
    assert saturate_inward_neighbors(t) == t


def test_saturate_square_adds_min_chord():
    sat = saturate_inward_neighbors(gen_cycle(4))
    assert set(sat.edges) - set(gen_cycle(4).edges) == {(0, 2)}


def test_saturate_octahedron_noop():
    t2 = gen_nested_triangles(2)
    assert saturate_inward_neighbors(t2) == t2


def test_saturate_gives_inward_neighbors(corpus):
    for label, emb in corpus:
        peels = onion_peels(emb)
        sat = saturate_inward_neighbors(emb)
        index = peels.index_of()
        for v, i in index.items():
            if i == 1:
                continue
            assert any(index[w] == i - 1 for w in sat.rotation(v)), (label, v)
        assert onion_peels(sat).k <= peels.k, label
        assert sat.outer_vertices == emb.outer_vertices, label


def test_saturate_nonsimple_inner_face():
    # two squares sharing the cut vertex 6; the middle face repeats 6,
    # so the fan anchors targets at first occurrences on a non-simple walk
    from onionpeel import Embedding

    emb = Embedding(
        {6: [1, 3, 5, 2], 1: [0, 6], 0: [2, 1], 2: [6, 0],
         3: [4, 6], 4: [5, 3], 5: [6, 4]},
        [(6, 1)],
    )
    assert any(not f.is_simple for f in emb.inner_faces)
    sat = saturate_inward_neighbors(emb)
    assert set(sat.edges) - set(emb.edges) == {(0, 3), (0, 4), (0, 5), (0, 6), (4, 6)}
    assert onion_peels(sat).k == 2


def test_forest_triangle_roots_only():
    f = build_rooted_forest(gen_cycle(3))
    assert f.roots == frozenset({0, 1, 2}) and f.height == 0 and not f.parent


def test_forest_k4_tiebreak():
    f = build_rooted_forest(gen_wheel(3))
    assert f.roots == frozenset({0, 1, 2})
    assert dict(f.parent) == {3: 0}
    assert f.height == 1


def test_forest_nested3_height():
    sat = saturate_inward_neighbors(gen_nested_triangles(3))
    assert build_rooted_forest(sat).height == 2


def test_forest_depth_is_bfs_distance(small_corpus):
    for label, emb in small_corpus:
        sat = saturate_inward_neighbors(emb)
        forest = build_rooted_forest(sat)
        # independent BFS distance from the outer vertex set
        dist = {v: 0 for v in sat.outer_vertices}
        frontier = sorted(dist)
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in sat.rotation(u):
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = sorted(nxt)
        assert dict(forest.depth) == dist, label


def test_forest_height_bound_corpus(corpus):
    for label, emb in corpus:
        k = onion_peels(emb).k
        sat = saturate_inward_neighbors(emb)
        forest = build_rooted_forest(sat)
        assert forest.height <= k - 1, label
        cert = verify_forest_bound(sat, forest)
        assert cert.peel_count <= cert.height + 1, label


def test_verify_forest_bound_k4():
    k4 = gen_wheel(3)
    cert = verify_forest_bound(k4, build_rooted_forest(k4))
    assert (cert.peel_count, cert.height) == (2, 1)


def test_nonspanning_forest_rejected():
    k4 = gen_wheel(3)
    bogus = RootedForest(parent={}, depth={0: 0, 1: 0, 2: 0}, roots=frozenset({0, 1, 2}))
    with pytest.raises(errors.UnreachableVertex):
        verify_forest_bound(k4, bogus)


def test_forest_roots_are_all_outer_vertices(corpus):
    for label, emb in corpus:
        forest = build_rooted_forest(saturate_inward_neighbors(emb))
        assert forest.roots == emb.outer_vertices, label


def test_counterexample_peel_sizes():
    g = gen_counterexample(2)
    peels = onion_peels(g)
    assert peels.k == 2
    assert len(peels.layers[0]) == 8  # the outer octagon
    assert len(peels.layers[1]) == 16
