"""EPG text format and DOT export.

EPG (embedded planar graph) is a whitespace-separated text format::

    epg 1
    # comment
    v 0: 1 2
    v 1: 2 0
    v 2: 0 1
    outer 0 1

One ``v`` line per vertex giving the full clockwise rotation (empty for
isolated vertices), one ``outer u v`` line per edged component naming its
outer dart.  Serialization is canonical (sorted vertices, rotations
starting at the smallest neighbor, sorted outer darts), so embedding ->
text -> embedding round-trips exactly and equal embeddings serialize to
identical bytes.
"""

from __future__ import annotations

from .embedding import Dart, Embedding, build_embedding
from .errors import FormatError

HEADER = "epg 1"


def format_epg(emb: Embedding) -> str:
    lines = [HEADER]
    for v in emb.vertices:
        ns = " ".join(str(w) for w in emb.rotation(v))
        lines.append(f"v {v}:" + (f" {ns}" if ns else ""))
    for u, w in emb.outer_darts:
        lines.append(f"outer {u} {w}")
    return "\n".join(lines) + "\n"


def parse_epg(text: str) -> Embedding:
    rotations: dict[int, list[int]] = {}
    outer: list[Dart] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.replace(":", " : ").split()
        if not saw_header:
            if tokens != ["epg", "1"]:
                raise FormatError(f"line {lineno}: expected header '{HEADER}'")
            saw_header = True
            continue
        if tokens[0] == "v":
            if len(tokens) < 3 or tokens[2] != ":":
                raise FormatError(f"line {lineno}: malformed vertex line")
            v = _int(tokens[1], lineno)
            if v in rotations:
                raise FormatError(f"line {lineno}: duplicate vertex {v}")
            rotations[v] = [_int(t, lineno) for t in tokens[3:]]
        elif tokens[0] == "outer":
            if len(tokens) != 3:
                raise FormatError(f"line {lineno}: malformed outer line")
            outer.append((_int(tokens[1], lineno), _int(tokens[2], lineno)))
        else:
            raise FormatError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if not saw_header:
        raise FormatError("empty input: missing EPG header")
    return build_embedding(rotations.keys(), rotations, outer)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: not an integer: {token!r}") from None


def to_dot(emb: Embedding, name: str = "embedding") -> str:
    """DOT rendering of the graph, with face walks annotated as comments."""
    lines = [f"graph {name} {{"]
    for i, f in enumerate(emb.faces):
        kind = "outer" if f.is_outer else "inner"
        cycle = " ".join(str(v) for v in f.vertices)
        lines.append(f"  // face {i} ({kind}): {cycle}")
    for v in emb.vertices:
        if emb.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in emb.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
