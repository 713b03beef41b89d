"""Conversion to triangulated disks and full triangulations.

The disk pipeline only ever adds edges, in five stages: saturate inner
faces (so the spanning forest exists before any outer-face edits), bridge
components across the outer region, split repeated outer-walk vertices,
split repeated inner-walk vertices, then ear-cut inner faces down to
triangles.  No stage removes a vertex from the outer face, so the outer
vertex set is preserved and the peel count cannot grow.  The apex step
then fans one outer vertex with exactly two outer neighbors across the
outer region, closing the disk into a triangulation at the cost of at most
one extra peel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .embedding import (
    Edge,
    Embedding,
    FaceWalk,
    fan_targets,
    is_triangulated_disk,
    is_triangulation,
    splice_fan,
    _chord_corners,
)
from .errors import InvariantViolation, RepairStuck, TooSmall
from .peeling import onion_peels, saturate_inward_neighbors

STAGES = ("saturate", "connect", "outer-cut", "inner-cut", "ear", "apex")


@dataclass(frozen=True)
class DiskConversionTrace:
    """Audit trail of a conversion: every added edge with its stage."""

    added_edges: tuple[tuple[int, int, str], ...]
    input: Embedding
    output: Embedding


def connect_components(emb: Embedding) -> Embedding:
    return _connect(emb)[0]


def _connect(emb: Embedding) -> tuple[Embedding, list[Edge]]:
    """Bridge components across the outer region, smallest outer ids first."""
    added: list[Edge] = []
    while len(emb.components) > 1:
        outer = emb.outer_vertices
        mins = sorted(min(c & outer) for c in emb.components)
        u, v = mins[0], mins[1]
        emb = _join(emb, u, v)
        added.append((u, v))
    return emb, added


def _outer_walk_of(emb: Embedding, v: int) -> FaceWalk | None:
    for f in emb.outer_faces:
        if v in f.vertex_set:
            return f
    return None


def _join(emb: Embedding, u: int, v: int) -> Embedding:
    rotations = emb.rotations_dict()
    drop: set = set()
    for x, y in ((u, v), (v, u)):
        walk = _outer_walk_of(emb, x)
        if walk is None:  # isolated vertex
            rotations[x] = [y]
        else:
            pos = walk.occurrences(x)[0]
            t = walk.darts[pos - 1][0]
            rotations[x].insert(rotations[x].index(t) + 1, y)
            drop.add(walk.darts[0])
    outer = [d for d in emb.outer_darts if d not in drop] + [(u, v)]
    return Embedding(rotations, outer)


def _scan_cut_repair(emb: Embedding, walk: FaceWalk) -> int | None:
    """First walk position whose repeated origin has addable flankers."""
    counts = Counter(walk.vertices)
    m = len(walk)
    for j in range(m):
        v = walk.darts[j][0]
        if counts[v] < 2:
            continue
        a = walk.darts[(j - 1) % m][0]
        b = walk.darts[j][1]
        if a != b and not emb.has_edge(a, b):
            return j
    return None


def repair_outer_cut_vertices(emb: Embedding) -> Embedding:
    return _repair_outer(emb)[0]


def _repair_outer(emb: Embedding) -> tuple[Embedding, list[Edge]]:
    """Enclose repeated outer-walk occurrences until the walk is simple."""
    added: list[Edge] = []
    while True:
        outer = emb.outer_faces
        if not outer or outer[0].is_simple:
            return emb, added
        walk = outer[0]
        j = _scan_cut_repair(emb, walk)
        if j is None:
            raise RepairStuck(
                "every occurrence of every repeated outer vertex has "
                "adjacent flankers"
            )
        m = len(walk)
        rotations = emb.rotations_dict()
        a, b = _chord_corners(rotations, walk, (j - 1) % m, (j + 1) % m)
        # the pocket around position j turns inner; the rest stays outer
        new_outer = [d for d in emb.outer_darts if d != walk.darts[0]]
        new_outer.append((a, b))
        emb = Embedding(rotations, new_outer)
        added.append((min(a, b), max(a, b)))


def repair_inner_cut_vertices(emb: Embedding) -> Embedding:
    return _repair_inner(emb)[0]


def _repair_inner(emb: Embedding) -> tuple[Embedding, list[Edge]]:
    """Same flanking-edge technique applied inside non-simple inner faces."""
    added: list[Edge] = []
    while True:
        walk = next(
            (f for f in emb.faces if not f.is_outer and not f.is_simple), None
        )
        if walk is None:
            return emb, added
        j = _scan_cut_repair(emb, walk)
        if j is None:
            raise RepairStuck(
                "every occurrence of every repeated inner-face vertex has "
                "adjacent flankers"
            )
        m = len(walk)
        rotations = emb.rotations_dict()
        a, b = _chord_corners(rotations, walk, (j - 1) % m, (j + 1) % m)
        emb = Embedding(rotations, emb.outer_darts)
        added.append((min(a, b), max(a, b)))


def triangulate_inner_faces(emb: Embedding) -> Embedding:
    return _triangulate_inner(emb)[0]


def _triangulate_inner(emb: Embedding) -> tuple[Embedding, list[Edge]]:
    """Ear-cut every inner face of length >= 4 down to triangles.

    An ear at position j adds the chord between its flanking vertices;
    eligibility means the chord is not yet an edge.  A planar embedding
    cannot carry two crossing exterior chords, so an eligible position
    always exists while any face is long.
    """
    added: list[Edge] = []
    while True:
        walk = next(
            (f for f in emb.faces if not f.is_outer and len(f) >= 4), None
        )
        if walk is None:
            return emb, added
        m = len(walk)
        j = next(
            (
                j
                for j in range(m)
                if not emb.has_edge(walk.darts[(j - 1) % m][0], walk.darts[j][1])
            ),
            None,
        )
        if j is None:
            raise InvariantViolation(
                f"no ear available on inner face {walk.vertices}"
            )
        rotations = emb.rotations_dict()
        a, b = _chord_corners(rotations, walk, (j - 1) % m, (j + 1) % m)
        emb = Embedding(rotations, emb.outer_darts)
        added.append((min(a, b), max(a, b)))


def to_triangulated_disk(emb: Embedding) -> tuple[Embedding, DiskConversionTrace]:
    """Add edges until the embedding is a triangulated disk.

    The outer vertex set of the output equals the input's and the peel
    count never increases; both are enforced here as bug certificates.
    """
    if emb.vertex_count < 3:
        raise TooSmall(f"need at least 3 vertices, got {emb.vertex_count}")
    k_in = onion_peels(emb).k
    added: list[tuple[int, int, str]] = []

    sat = saturate_inward_neighbors(emb)
    added += [(u, v, "saturate") for u, v in sorted(set(sat.edges) - set(emb.edges))]
    current, step = _connect(sat)
    added += [(u, v, "connect") for u, v in step]
    current, step = _repair_outer(current)
    added += [(u, v, "outer-cut") for u, v in step]
    current, step = _repair_inner(current)
    added += [(u, v, "inner-cut") for u, v in step]
    current, step = _triangulate_inner(current)
    added += [(u, v, "ear") for u, v in step]

    if not is_triangulated_disk(current):
        raise InvariantViolation("disk pipeline did not produce a disk")
    if current.outer_vertices != emb.outer_vertices:
        raise InvariantViolation("disk pipeline changed the outer vertex set")
    if onion_peels(current).k > k_in:
        raise InvariantViolation(
            f"disk pipeline raised the peel count {k_in} -> "
            f"{onion_peels(current).k}"
        )
    trace = DiskConversionTrace(
        added_edges=tuple(added), input=emb, output=current
    )
    return current, trace


def to_full_triangulation(emb: Embedding) -> tuple[Embedding, DiskConversionTrace]:
    """Triangulate fully: disk conversion plus the outer apex fan.

    The apex r is the smallest outer-cycle vertex with exactly two
    neighbors on the outer cycle (one exists: the outer cycle plus its
    chords is a 2-connected outerplanar graph, which has a degree-2
    vertex).  r is fanned to every non-adjacent outer vertex across the
    outer region; the final outer face is the fan triangle at r's
    cyclic-successor neighbor.  Peel count grows by at most one.
    """
    if emb.vertex_count < 3:
        raise TooSmall(f"need at least 3 vertices, got {emb.vertex_count}")
    k_in = onion_peels(emb).k
    disk, disk_trace = to_triangulated_disk(emb)
    walk = disk.outer_faces[0]
    cycle = walk.vertices
    outer_set = frozenset(cycle)
    candidates = sorted(
        v for v in cycle if len(set(disk.rotation(v)) & outer_set) == 2
    )
    if not candidates:
        raise InvariantViolation("no outer vertex with two outer neighbors")
    r = candidates[0]

    added = list(disk_trace.added_edges)
    if len(cycle) == 3:
        result = disk
    else:
        pos_r = cycle.index(r)
        targets = fan_targets(walk, pos_r, lambda v: disk.has_edge(r, v))
        rotations = disk.rotations_dict()
        fan = splice_fan(rotations, walk, pos_r, targets)
        added += [(min(u, v), max(u, v), "apex") for u, v in fan]
        outer_dart = walk.darts[(pos_r + 1) % len(cycle)]
        result = Embedding(rotations, [outer_dart])

    if not is_triangulation(result):
        raise InvariantViolation("apex step did not produce a triangulation")
    if onion_peels(result).k > k_in + 1:
        raise InvariantViolation(
            f"apex step raised the peel count {k_in} -> {onion_peels(result).k}"
        )
    trace = DiskConversionTrace(
        added_edges=tuple(added), input=emb, output=result
    )
    return result, trace


def verify_trace(trace: DiskConversionTrace, full: bool = False) -> None:
    """Re-check a conversion trace against its input and output.

    Confirms the stage labels, that the added edges are new and mutually
    distinct, that the output edge set is exactly input plus additions,
    and that re-running the (deterministic) pipeline reproduces both the
    output and the trace.
    """
    seen: set[Edge] = set()
    input_edges = set(trace.input.edges)
    for u, v, stage in trace.added_edges:
        if stage not in STAGES:
            raise InvariantViolation(f"unknown stage {stage!r}")
        e = (min(u, v), max(u, v))
        if e in input_edges or e in seen:
            raise InvariantViolation(f"edge {e} not new in trace")
        seen.add(e)
    if set(trace.output.edges) != input_edges | seen:
        raise InvariantViolation("trace edges do not account for the output")
    rerun, retrace = (
        to_full_triangulation(trace.input) if full else to_triangulated_disk(trace.input)
    )
    if rerun != trace.output or retrace.added_edges != trace.added_edges:
        raise InvariantViolation("trace does not replay to the recorded output")
