import pytest

from onionpeel import (
    gen_counterexample,
    gen_cycle,
    gen_k4_minus_edge,
    gen_nested_triangles,
    gen_path,
    gen_random_kouter,
    gen_wheel,
)


def corpus_specs():
    """(label, family, args) for every corpus instance.

    All generator families with parameters up to 6 (sizes up to 9 for the
    light families), plus 100 seeded random instances.  gen_path(2) is
    excluded: with two vertices it cannot be disk-converted.
    """
    specs = []
    for i in range(1, 7):
        specs.append((f"nested{i}", gen_nested_triangles, (i,)))
    for k in range(2, 7):
        specs.append((f"counter{k}", gen_counterexample, (k,)))
    specs.append(("k4me", gen_k4_minus_edge, ()))
    for n in range(3, 10):
        specs.append((f"cycle{n}", gen_cycle, (n,)))
    for n in range(3, 9):
        specs.append((f"wheel{n}", gen_wheel, (n,)))
    for n in range(3, 11):
        specs.append((f"path{n}", gen_path, (n,)))
    for k in range(1, 5):
        for w in range(3, 8):
            for s in range(1, 6):
                specs.append((f"rand{k}_{w}_{s}", gen_random_kouter, (k, w, s)))
    return specs


@pytest.fixture(scope="session")
def corpus():
    return [(label, fn(*args)) for label, fn, args in corpus_specs()]


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Instances small enough for per-test exhaustive re-derivations."""
    return [(label, emb) for label, emb in corpus if emb.vertex_count <= 16]
