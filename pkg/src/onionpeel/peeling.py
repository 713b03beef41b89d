"""Onion-peel decompositions and outer-face-rooted spanning forests.

The i-th peel of an embedding is the set of outer-region vertices after
i-1 rounds of deleting all outer-region vertices; the number of nonempty
peels is the outerplanarity of this particular embedding.  Saturation adds
edges inside each inner face so that every vertex one peel deep gains a
neighbor one peel up, after which a multi-source BFS from the outer
vertices yields a spanning forest whose height is at most (peel count - 1).
Peels are cached on the embedding value; surgery produces new values, so
caches never go stale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .embedding import Embedding, fan_targets, remove_vertices, splice_fan
from .errors import BoundViolated, InvariantViolation, UnreachableVertex


@dataclass(frozen=True)
class PeelDecomposition:
    """Nonempty vertex layers L_1..L_k partitioning the vertex set."""

    layers: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.layers)

    def index_of(self) -> dict[int, int]:
        """Vertex -> 1-based peel index."""
        return {v: i + 1 for i, layer in enumerate(self.layers) for v in layer}


@dataclass(frozen=True)
class RootedForest:
    """Spanning forest with every tree rooted at one outer-face vertex."""

    parent: Mapping[int, int]  # roots unmapped
    depth: Mapping[int, int]
    roots: frozenset[int]

    @property
    def height(self) -> int:
        return max(self.depth.values(), default=0)

    def root_path(self, v: int) -> list[int]:
        """Vertices from v up to (and including) its root."""
        path = [v]
        while v in self.parent:
            v = self.parent[v]
            path.append(v)
        return path

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (min(v, p), max(v, p)) for v, p in self.parent.items()
        )


def onion_peels(emb: Embedding) -> PeelDecomposition:
    """Peel layers of a fixed embedding, by iterated outer-vertex removal."""
    memo = emb._memo.get("peels")
    if memo is not None:
        return memo
    layers = []
    current = emb
    while current.vertex_count:
        layer = current.outer_vertices
        layers.append(layer)
        current = remove_vertices(current, layer)
    result = PeelDecomposition(layers=tuple(layers))
    emb._memo["peels"] = result
    return result


def check_inward_face(
    emb: Embedding, peels: PeelDecomposition
) -> dict[int, tuple[int, ...]]:
    """Witness faces showing each deep vertex sees the peel above it.

    For every v in L_i with i > 1, returns the indices of v's incident
    faces that contain an L_{i-1} vertex.  Every such vertex must get a
    nonempty witness tuple; an empty one would falsify the peel structure,
    so it raises a bug certificate.
    """
    index = peels.index_of()
    report: dict[int, tuple[int, ...]] = {}
    incident: dict[int, list[int]] = {}
    for fi, f in enumerate(emb.faces):
        for v in f.vertex_set:
            incident.setdefault(v, []).append(fi)
    for v, i in sorted(index.items()):
        if i == 1:
            continue
        witnesses = tuple(
            fi
            for fi in incident.get(v, ())
            if any(index[w] == i - 1 for w in emb.faces[fi].vertex_set)
        )
        if not witnesses:
            raise InvariantViolation(
                f"vertex {v} in peel {i} has no incident face touching "
                f"peel {i - 1}"
            )
        report[v] = witnesses
    return report


def saturate_inward_neighbors(emb: Embedding) -> Embedding:
    """Add edges inside inner faces so every deep vertex sees the peel above.

    In each inner face, the vertex w in the smallest-index peel (ties:
    smallest id, first occurrence) is fanned to every face vertex not
    already adjacent to it.  Peels are taken from the input embedding; the
    outer face is untouched and the peel count never increases.
    """
    index = onion_peels(emb).index_of()
    rotations = emb.rotations_dict()
    adjacency = {v: set(ns) for v, ns in rotations.items()}
    for f in emb.faces:
        if f.is_outer:
            continue
        verts = f.vertices
        anchor_pos = min(range(len(verts)), key=lambda p: (index[verts[p]], verts[p]))
        w = verts[anchor_pos]
        targets = fan_targets(f, anchor_pos, lambda v: v in adjacency[w])
        for _, v in splice_fan(rotations, f, anchor_pos, targets):
            adjacency[w].add(v)
            adjacency[v].add(w)
    return Embedding(rotations, emb.outer_darts)


def build_rooted_forest(emb: Embedding) -> RootedForest:
    """Multi-source BFS forest from all outer-face vertices.

    Every outer vertex is a depth-0 root; each remaining vertex adopts the
    smallest-id neighbor in the previous level as its parent.  On a
    saturated embedding the height is at most (peel count - 1).
    """
    roots = sorted(emb.outer_vertices)
    depth: dict[int, int] = {r: 0 for r in roots}
    parent: dict[int, int] = {}
    level = roots
    d = 0
    while level:
        d += 1
        candidates: dict[int, int] = {}
        for u in level:
            for v in emb.rotation(u):
                if v in depth:
                    continue
                if v not in candidates or u < candidates[v]:
                    candidates[v] = u
        level = sorted(candidates)
        for v in level:
            parent[v] = candidates[v]
            depth[v] = d
    missing = set(emb.vertices) - set(depth)
    if missing:
        raise UnreachableVertex(
            f"no path to the outer face from: {sorted(missing)[:5]}"
        )
    return RootedForest(parent=parent, depth=depth, roots=frozenset(roots))


def validate_forest(emb: Embedding, forest: RootedForest) -> None:
    """Check outer-rootedness, spanning, depth coherence, acyclicity."""
    verts = set(emb.vertices)
    covered = set(forest.depth)
    if covered != verts:
        raise UnreachableVertex(
            f"forest does not span: missing {sorted(verts - covered)[:5]}"
        )
    outer = emb.outer_vertices
    for r in forest.roots:
        if r not in outer:
            raise InvariantViolation(f"root {r} is not an outer vertex")
    for v, p in forest.parent.items():
        if not emb.has_edge(v, p):
            raise InvariantViolation(f"forest edge ({v},{p}) not in embedding")
        if forest.depth[v] != forest.depth[p] + 1:
            raise InvariantViolation(f"depth({v}) != depth({p}) + 1")
    for v in verts:
        if (v in forest.roots) == (v in forest.parent):
            raise InvariantViolation(f"vertex {v}: exactly one of root/parented")
        seen = {v}
        x = v
        while x in forest.parent:
            x = forest.parent[x]
            if x in seen:
                raise InvariantViolation(f"parent cycle through {v}")
            seen.add(x)
        if x not in forest.roots:
            raise UnreachableVertex(f"vertex {v} has no root path")
        if len(outer & seen) != 1:
            raise InvariantViolation(
                f"tree of {v} contains {len(outer & seen)} outer vertices"
            )


@dataclass(frozen=True)
class ForestCertificate:
    """Peel/height fragment of a width certificate."""

    peel_count: int
    height: int


def verify_forest_bound(emb: Embedding, forest: RootedForest) -> ForestCertificate:
    """Certify that a rooted forest of height h witnesses <= h+1 peels.

    Checks peel_count <= height + 1 and that every depth-d vertex lies in
    peel d+1 or an earlier one.  Raises BoundViolated otherwise: that would
    contradict the forest-height theorem, so it is a bug certificate.
    """
    validate_forest(emb, forest)
    peels = onion_peels(emb)
    h = forest.height
    if peels.k > h + 1:
        raise BoundViolated(
            f"peel count {peels.k} exceeds forest height {h} + 1"
        )
    index = peels.index_of()
    for v, d in forest.depth.items():
        if index[v] > d + 1:
            raise BoundViolated(
                f"vertex {v} at depth {d} sits in peel {index[v]} > {d + 1}"
            )
    return ForestCertificate(peel_count=peels.k, height=h)
