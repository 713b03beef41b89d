"""Combinatorial planar embeddings as rotation systems.

An embedding is a per-vertex cyclic order of neighbors (the rotation,
clockwise by convention) plus one designated outer dart per edged
component.  A *dart* is one direction of an edge and is represented by the
ordered pair ``(u, v)``; the pair is its own identifier, its origin is
``u`` and its twin is ``(v, u)``.  Simple graphs only: no self-loops, no
parallel edges.

Faces are traced with one fixed successor rule:

    next(u -> v) = (v -> w)  where w follows u in the rotation at v.

All geometric statements are realized through this single convention;
nothing downstream depends on clockwise versus counterclockwise, only on
consistency.

Embeddings are immutable values.  Surgery (adding an edge inside a face,
removing outer vertices) returns a new embedding; derived data (face
walks, components) is computed once and cached on the instance.
Disconnected inputs are accepted only when every component lies in the
outer region: one outer dart per edged component, all merged into a single
outer region.  Isolated vertices carry an empty rotation and count as
outer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadParameter,
    Disconnected,
    EdgeExists,
    EulerViolation,
    InvariantViolation,
    NestedComponent,
    NotOnFace,
    NotOnOuterFace,
    ParallelEdge,
    SameVertex,
    SelfLoop,
)

Dart = tuple[int, int]
Edge = tuple[int, int]


def twin(dart: Dart) -> Dart:
    """The opposite direction of the same edge."""
    u, v = dart
    return (v, u)


def edge_of(dart: Dart) -> Edge:
    """Unordered edge of a dart, normalized to (min, max)."""
    u, v = dart
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FaceWalk:
    """One face of an embedding: a closed dart walk under the successor rule.

    Walks start at their minimal dart and every dart lies in exactly one
    walk.  ``is_outer`` marks the walks whose union forms the outer region.
    """

    darts: tuple[Dart, ...]
    is_outer: bool

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Origins along the walk, with repetition."""
        return tuple(d[0] for d in self.darts)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(d[0] for d in self.darts)

    @property
    def is_simple(self) -> bool:
        """True when no vertex repeats on the walk."""
        return len(self.vertex_set) == len(self.darts)

    def edges(self) -> tuple[Edge, ...]:
        return tuple(edge_of(d) for d in self.darts)

    def occurrences(self, v: int) -> tuple[int, ...]:
        """Positions at which v is the origin of a walk dart."""
        return tuple(i for i, d in enumerate(self.darts) if d[0] == v)


def _canonical_rotation(rot: tuple[int, ...]) -> tuple[int, ...]:
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def _canonical_walk(darts: list[Dart]) -> tuple[Dart, ...]:
    i = darts.index(min(darts))
    return tuple(darts[i:] + darts[:i])


class Embedding:
    """Validated, canonical, immutable rotation-system embedding."""

    def __init__(
        self,
        rotations: Mapping[int, Sequence[int]],
        outer_darts: Iterable[Dart],
    ):
        rot = {int(v): tuple(int(n) for n in ns) for v, ns in rotations.items()}
        self._validate_structure(rot)
        walks, walk_of = _trace(rot)
        self._check_euler(rot, walks)
        outer = self._resolve_outer(rot, walks, walk_of, outer_darts)

        self._rot = {v: _canonical_rotation(ns) for v, ns in rot.items()}
        self._outer_darts = outer
        outer_walks = {walk_of[d] for d in outer}
        self._faces = tuple(
            FaceWalk(darts=w, is_outer=(i in outer_walks))
            for i, w in enumerate(walks)
        )
        self._walk_of_dart = walk_of
        self._key = (
            tuple(sorted(self._rot.items())),
            self._outer_darts,
        )
        self._memo: dict = {}

    # -- construction-time checks -------------------------------------

    @staticmethod
    def _validate_structure(rot: dict[int, tuple[int, ...]]) -> None:
        for v, ns in rot.items():
            if v in ns:
                raise SelfLoop(f"vertex {v} lists itself as a neighbor")
            if len(set(ns)) != len(ns):
                raise ParallelEdge(f"vertex {v} lists a neighbor twice")
            for w in ns:
                if w not in rot:
                    raise AsymmetricAdjacency(
                        f"{v} lists unknown vertex {w}"
                    )
                if v not in rot[w]:
                    raise AsymmetricAdjacency(
                        f"{v} lists {w} but {w} does not list {v}"
                    )

    @staticmethod
    def _check_euler(
        rot: dict[int, tuple[int, ...]], walks: list[tuple[Dart, ...]]
    ) -> None:
        comp_of = _components(rot)
        n_verts: dict[int, int] = {}
        n_darts: dict[int, int] = {}
        n_walks: dict[int, int] = {}
        for v, ns in rot.items():
            c = comp_of[v]
            n_verts[c] = n_verts.get(c, 0) + 1
            n_darts[c] = n_darts.get(c, 0) + len(ns)
        for w in walks:
            c = comp_of[w[0][0]]
            n_walks[c] = n_walks.get(c, 0) + 1
        for c, dv in n_darts.items():
            if dv == 0:
                continue
            v, e, f = n_verts[c], dv // 2, n_walks.get(c, 0)
            if v - e + f != 2:
                raise EulerViolation(
                    f"component of vertex {c}: V-E+F = {v}-{e}+{f} != 2 "
                    "(not a sphere embedding)"
                )

    @staticmethod
    def _resolve_outer(
        rot: dict[int, tuple[int, ...]],
        walks: list[tuple[Dart, ...]],
        walk_of: dict[Dart, int],
        outer_darts: Iterable[Dart],
    ) -> tuple[Dart, ...]:
        comp_of = _components(rot)
        chosen: dict[int, int] = {}  # component -> walk index
        for d in outer_darts:
            d = (int(d[0]), int(d[1]))
            if d not in walk_of:
                raise BadParameter(f"outer dart {d} is not a dart of the graph")
            c = comp_of[d[0]]
            w = walk_of[d]
            if c in chosen and chosen[c] != w:
                raise NestedComponent(
                    f"component of vertex {d[0]} has two distinct outer "
                    "face designations"
                )
            chosen[c] = w
        edged = {comp_of[v] for v, ns in rot.items() if ns}
        missing = edged - set(chosen)
        if missing:
            v = min(missing)
            raise NestedComponent(
                f"component of vertex {v} has no outer face designation"
            )
        return tuple(sorted(walks[w][0] for w in chosen.values()))

    # -- value semantics ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return (
            f"Embedding({self.vertex_count} vertices, {self.edge_count} edges, "
            f"{len(self._faces)} face walks)"
        )

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._rot))

    @property
    def vertex_count(self) -> int:
        return len(self._rot)

    def rotation(self, v: int) -> tuple[int, ...]:
        """Cyclic neighbor order at v (canonical start)."""
        return self._rot[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._rot

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._rot and v in self._rot[u]

    @property
    def edges(self) -> tuple[Edge, ...]:
        memo = self._memo.get("edges")
        if memo is None:
            memo = tuple(
                sorted((v, w) for v, ns in self._rot.items() for w in ns if v < w)
            )
            self._memo["edges"] = memo
        return memo

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self._rot.values()) // 2

    @property
    def darts(self) -> tuple[Dart, ...]:
        return tuple(sorted(self._walk_of_dart))

    @property
    def outer_darts(self) -> tuple[Dart, ...]:
        return self._outer_darts

    @property
    def faces(self) -> tuple[FaceWalk, ...]:
        return self._faces

    @property
    def outer_faces(self) -> tuple[FaceWalk, ...]:
        return tuple(f for f in self._faces if f.is_outer)

    @property
    def inner_faces(self) -> tuple[FaceWalk, ...]:
        return tuple(f for f in self._faces if not f.is_outer)

    def face_index_of_dart(self, d: Dart) -> int:
        return self._walk_of_dart[d]

    @property
    def merged_face_count(self) -> int:
        """Face count with all outer walks merged into one region."""
        n_outer = len(self.outer_faces)
        if n_outer == 0:
            return 1 if self._rot else 0
        return len(self._faces) - n_outer + 1

    @property
    def outer_vertices(self) -> frozenset[int]:
        """Vertices on the outer region, isolated vertices included."""
        memo = self._memo.get("outer_vertices")
        if memo is None:
            on_walks = frozenset(
                v for f in self.outer_faces for v in f.vertex_set
            )
            isolated = frozenset(v for v, ns in self._rot.items() if not ns)
            memo = on_walks | isolated
            self._memo["outer_vertices"] = memo
        return memo

    @property
    def components(self) -> tuple[frozenset[int], ...]:
        memo = self._memo.get("components")
        if memo is None:
            comp_of = _components(self._rot)
            groups: dict[int, set[int]] = {}
            for v, c in comp_of.items():
                groups.setdefault(c, set()).add(v)
            memo = tuple(frozenset(groups[c]) for c in sorted(groups))
            self._memo["components"] = memo
        return memo

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def rotations_dict(self) -> dict[int, list[int]]:
        """Mutable copy of the rotation map, for surgery."""
        return {v: list(ns) for v, ns in self._rot.items()}


# ---------------------------------------------------------------------------
# Face tracing
# ---------------------------------------------------------------------------


def _trace(
    rot: Mapping[int, Sequence[int]],
) -> tuple[list[tuple[Dart, ...]], dict[Dart, int]]:
    """Partition all darts into face walks under the successor rule."""
    succ_index: dict[int, dict[int, int]] = {
        v: {w: i for i, w in enumerate(ns)} for v, ns in rot.items()
    }
    all_darts = sorted((v, w) for v, ns in rot.items() for w in ns)
    walk_of: dict[Dart, int] = {}
    walks: list[tuple[Dart, ...]] = []
    for start in all_darts:
        if start in walk_of:
            continue
        idx = len(walks)
        walk: list[Dart] = []
        d = start
        while True:
            walk.append(d)
            walk_of[d] = idx
            u, v = d
            ns = rot[v]
            d = (v, ns[(succ_index[v][u] + 1) % len(ns)])
            if d == start:
                break
        walks.append(_canonical_walk(walk))
    return walks, walk_of


def _components(rot: Mapping[int, Sequence[int]]) -> dict[int, int]:
    """Map each vertex to the smallest vertex of its component."""
    comp: dict[int, int] = {}
    for v in sorted(rot):
        if v in comp:
            continue
        stack = [v]
        comp[v] = v
        while stack:
            x = stack.pop()
            for w in rot[x]:
                if w not in comp:
                    comp[w] = v
                    stack.append(w)
    return comp


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def build_embedding(
    vertices: Iterable[int],
    rotations: Mapping[int, Sequence[int]],
    outer_darts: Iterable[Dart],
) -> Embedding:
    """Validate and construct an embedding.

    ``vertices`` may list isolated vertices absent from ``rotations``;
    every rotation key must be listed.  All invariants are checked eagerly.
    """
    vs = {int(v) for v in vertices}
    unknown = set(rotations) - vs
    if unknown:
        raise AsymmetricAdjacency(
            f"rotation map names unlisted vertices: {sorted(unknown)[:5]}"
        )
    full = {v: tuple(rotations.get(v, ())) for v in vs}
    return Embedding(full, outer_darts)


def trace_faces(emb: Embedding) -> tuple[FaceWalk, ...]:
    """All face walks of the embedding (cached on the instance)."""
    return emb.faces


def is_triangulated_disk(emb: Embedding) -> bool:
    """Outer face a simple cycle of length >= 3, all inner faces triangles."""
    if not emb.is_connected:
        return False
    outer = emb.outer_faces
    if len(outer) != 1:
        return False
    if len(outer[0]) < 3 or not outer[0].is_simple:
        return False
    return all(len(f) == 3 for f in emb.inner_faces)


def is_triangulation(emb: Embedding) -> bool:
    """Every face (outer included) a triangle; at least 3 vertices."""
    if emb.vertex_count < 3 or not emb.is_connected:
        return False
    return all(len(f) == 3 for f in emb.faces)


def _resolve_face(emb: Embedding, face: FaceWalk | int) -> FaceWalk:
    if isinstance(face, int):
        try:
            return emb.faces[face]
        except IndexError:
            raise NotOnFace(f"no face with index {face}") from None
    for f in emb.faces:
        if f.darts == face.darts:
            return f
    raise NotOnFace("given walk is not a face of this embedding")


def _insert_after(rot: list[int], anchor: int, value: int) -> None:
    rot.insert(rot.index(anchor) + 1, value)


def _chord_corners(
    rotations: dict[int, list[int]], walk: FaceWalk, pos_u: int, pos_v: int
) -> Edge:
    """Add an edge between the corners at two positions of one face walk.

    The corner at position ``j`` is (t -> x -> head) where ``t`` is the
    origin of the preceding walk dart; the new neighbor is inserted right
    after ``t`` in the rotation at ``x``.  Returns the added edge.
    """
    m = len(walk.darts)
    u = walk.darts[pos_u][0]
    v = walk.darts[pos_v][0]
    t_u = walk.darts[(pos_u - 1) % m][0]
    t_v = walk.darts[(pos_v - 1) % m][0]
    _insert_after(rotations[u], t_u, v)
    _insert_after(rotations[v], t_v, u)
    return (u, v)


def add_edge_in_face(
    emb: Embedding,
    u: int,
    v: int,
    face: FaceWalk | int,
    u_occurrence: int = 0,
    v_occurrence: int = 0,
) -> Embedding:
    """Split a face by a new edge (u, v) drawn inside it.

    ``u_occurrence``/``v_occurrence`` select which occurrence of the vertex
    on the walk anchors the edge when the face is not simple.  If the face
    was outer, the sub-face containing the component's outer dart stays
    outer.
    """
    if u == v:
        raise SameVertex(f"cannot add edge ({u}, {v})")
    if emb.has_edge(u, v):
        raise EdgeExists(f"edge ({u}, {v}) already present")
    walk = _resolve_face(emb, face)
    occ_u = walk.occurrences(u)
    occ_v = walk.occurrences(v)
    if u_occurrence >= len(occ_u):
        raise NotOnFace(f"vertex {u} occurrence {u_occurrence} not on face")
    if v_occurrence >= len(occ_v):
        raise NotOnFace(f"vertex {v} occurrence {v_occurrence} not on face")
    rotations = emb.rotations_dict()
    _chord_corners(rotations, walk, occ_u[u_occurrence], occ_v[v_occurrence])
    return Embedding(rotations, emb.outer_darts)


def remove_vertices(emb: Embedding, remove: Iterable[int]) -> Embedding:
    """Delete outer-region vertices and remark the new outer region.

    Every removed vertex must lie on the outer region.  The old outer
    region merges with every face incident to a removed vertex: a
    surviving face is outer iff one of its darts bounded such a face.
    The result may be disconnected or empty.
    """
    gone = {int(v) for v in remove}
    for v in gone:
        if not emb.has_vertex(v):
            raise NotOnOuterFace(f"vertex {v} not in embedding")
    interior = gone - emb.outer_vertices
    if interior:
        raise NotOnOuterFace(
            f"vertices not on the outer region: {sorted(interior)[:5]}"
        )

    dissolving: set[int] = set()
    for i, f in enumerate(emb.faces):
        if f.is_outer or (f.vertex_set & gone):
            dissolving.add(i)

    rotations = {
        v: [w for w in ns if w not in gone]
        for v, ns in ((x, emb.rotation(x)) for x in emb.vertices)
        if v not in gone
    }
    if not rotations:
        return Embedding({}, ())

    walks, walk_of = _trace(rotations)
    marked = {
        i
        for i, w in enumerate(walks)
        if any(emb.face_index_of_dart(d) in dissolving for d in w)
    }
    comp_of = _components(rotations)
    per_comp: dict[int, set[int]] = {}
    for i in marked:
        per_comp.setdefault(comp_of[walks[i][0][0]], set()).add(i)
    edged = {comp_of[v] for v, ns in rotations.items() if ns}
    for c in edged:
        ws = per_comp.get(c, set())
        if len(ws) != 1:
            raise InvariantViolation(
                f"outer remarking chose {len(ws)} walks for component {c}"
            )
    outer = tuple(walks[next(iter(ws))][0] for ws in per_comp.values())
    return Embedding(rotations, outer)


@dataclass(frozen=True)
class DualGraph:
    """Dual multigraph: one node per face walk, one edge per primal edge."""

    node_count: int
    # (face_i, face_j, primal edge), sorted by primal edge
    edges: tuple[tuple[int, int, Edge], ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def dual_graph(emb: Embedding) -> DualGraph:
    """Dual of a connected embedding, with primal-edge back-references."""
    if not emb.is_connected:
        raise Disconnected("dual graph requires a connected embedding")
    edges = []
    for e in emb.edges:
        u, v = e
        edges.append(
            (emb.face_index_of_dart((u, v)), emb.face_index_of_dart((v, u)), e)
        )
    return DualGraph(node_count=len(emb.faces), edges=tuple(edges))


# ---------------------------------------------------------------------------
# Shared surgery helpers (used by peeling and triangulation)
# ---------------------------------------------------------------------------


def fan_targets(walk: FaceWalk, anchor_pos: int, adjacency_ok) -> list[int]:
    """Positions of fan targets on a walk, in walk order from the anchor.

    Targets are distinct vertices other than the anchor vertex for which
    ``adjacency_ok(vertex)`` is false (the edge is missing), each anchored
    at its first occurrence on the walk.  The returned positions are
    sorted by walk offset from the anchor, the order insertions must
    follow for the fan to stay inside the face.
    """
    m = len(walk.darts)
    w = walk.darts[anchor_pos][0]
    first_pos: dict[int, int] = {}
    for pos, d in enumerate(walk.darts):
        if d[0] != w and d[0] not in first_pos:
            first_pos[d[0]] = pos
    out = [pos for v, pos in first_pos.items() if not adjacency_ok(v)]
    out.sort(key=lambda pos: (pos - anchor_pos) % m)
    return out


def splice_fan(
    rotations: dict[int, list[int]],
    walk: FaceWalk,
    anchor_pos: int,
    target_positions: Sequence[int],
) -> list[Edge]:
    """Fan edges from the anchor corner to targets inside one face.

    Targets must be in walk order from the anchor (as from
    :func:`fan_targets`); each insertion anchors at the same corner of the
    anchor vertex, so all new edges are drawn inside the face.  Returns the
    added edges in insertion order.
    """
    m = len(walk.darts)
    w = walk.darts[anchor_pos][0]
    t_w = walk.darts[(anchor_pos - 1) % m][0]
    added = []
    for pos in target_positions:
        v = walk.darts[pos][0]
        t_v = walk.darts[(pos - 1) % m][0]
        # between t_w and the previously inserted spoke, farthest target last
        _insert_after(rotations[w], t_w, v)
        _insert_after(rotations[v], t_v, w)
        added.append((w, v))
    return added
