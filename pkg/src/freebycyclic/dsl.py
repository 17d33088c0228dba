"""Line-oriented text format for graph maps.

::

    # comment
    name doubling
    vertex v
    edge a v v          # edge <name> <tail> <head>
    image a a a         # image <edge> <token> ...
    basepoint v         # optional: basepoint of the splitting
    tree                # optional: spanning-tree edges (may be empty)

An image token is an edge name, ``~name`` for the reversed edge, or a single
uppercase letter ``A`` meaning ``~a`` when ``a`` is a one-letter edge.  A token
that is none of these but spells a word in one-letter edges (``DEABF``) is
expanded letter by letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import DSLSyntaxError, InconsistentEndpoints, UnknownEdge, ValidationError
from .graph_core import Graph, GraphMap, Step


@dataclass
class GraphMapDocument:
    graph_map: GraphMap
    name: str | None = None
    comments: list[str] = field(default_factory=list)
    source: str | None = None
    basepoint: str | None = None
    tree: tuple[str, ...] | None = None


def _token_steps(tok: str, edges: dict[str, int], line: int, col: int) -> list[Step]:
    if tok in edges:
        return [(tok, 1)]
    if tok.startswith("~") and tok[1:] in edges:
        return [(tok[1:], -1)]
    if tok.startswith("~"):
        raise UnknownEdge(f"unknown edge {tok[1:]!r} (line {line}, column {col})")
    out = []
    for k, ch in enumerate(tok):
        if ch in edges and len(ch) == 1:
            out.append((ch, 1))
        elif ch.isupper() and ch.lower() in edges:
            out.append((ch.lower(), -1))
        else:
            raise UnknownEdge(f"unknown edge in token {tok!r} (line {line}, column {col + k})")
    return out


def parse(text: str, source: str | None = None) -> GraphMapDocument:
    """Parse a graph-map document and validate the map."""
    vertices: list[str] = []
    edges: dict[str, int] = {}
    ends: dict[str, tuple[str, str]] = {}
    images: dict[str, list[Step]] = {}
    image_lines: dict[str, int] = {}
    name = None
    basepoint = None
    tree = None
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        if comment.strip():
            comments.append(comment.strip())
        words = body.split()
        if not words:
            continue
        cols = []
        pos = 0
        for w in words:
            pos = body.index(w, pos)
            cols.append(pos + 1)
            pos += len(w)
        kw = words[0]
        if kw == "name":
            name = " ".join(words[1:])
        elif kw == "vertex":
            if len(words) != 2:
                raise DSLSyntaxError("expected 'vertex <name>'", lineno, cols[0])
            if words[1] in vertices:
                raise DSLSyntaxError(f"duplicate vertex {words[1]!r}", lineno, cols[1])
            vertices.append(words[1])
        elif kw == "edge":
            if len(words) != 4:
                raise DSLSyntaxError("expected 'edge <name> <tail> <head>'", lineno, cols[0])
            e, t, h = words[1:]
            if e in edges:
                raise DSLSyntaxError(f"duplicate edge {e!r}", lineno, cols[1])
            for v, c in ((t, cols[2]), (h, cols[3])):
                if v not in vertices:
                    raise DSLSyntaxError(f"undeclared vertex {v!r}", lineno, c)
            edges[e] = lineno
            ends[e] = (t, h)
        elif kw == "image":
            if len(words) < 3:
                raise DSLSyntaxError("expected 'image <edge> <token> ...'", lineno, cols[0])
            e = words[1]
            if e not in edges:
                raise UnknownEdge(f"image for unknown edge {e!r} (line {lineno}, column {cols[1]})")
            if e in images:
                raise DSLSyntaxError(f"second image for edge {e!r}", lineno, cols[1])
            steps: list[Step] = []
            for tok, c in zip(words[2:], cols[2:]):
                steps.extend(_token_steps(tok, edges, lineno, c))
            images[e] = steps
            image_lines[e] = lineno
        elif kw == "basepoint":
            if len(words) != 2 or words[1] not in vertices:
                raise DSLSyntaxError("expected 'basepoint <declared vertex>'", lineno, cols[0])
            basepoint = words[1]
        elif kw == "tree":
            tree = tuple(words[1:])
        else:
            raise DSLSyntaxError(f"unknown keyword {kw!r}", lineno, cols[0])
    if not vertices:
        raise DSLSyntaxError("no vertices declared", 1, 1)
    graph = Graph.from_edges(ends, vertices)
    missing = [e for e in edges if e not in images]
    if missing:
        raise ValidationError(f"no image line for edges {missing}")
    if tree is not None and any(e not in edges for e in tree):
        raise UnknownEdge(f"tree names an unknown edge: {list(tree)}")
    f = GraphMap(graph, images)
    return GraphMapDocument(f, name=name, comments=comments, source=source, basepoint=basepoint, tree=tree)


def render(doc: GraphMapDocument | GraphMap) -> str:
    """Serialize to the text format; ``parse(render(d))`` rebuilds the same map."""
    f = doc.graph_map if isinstance(doc, GraphMapDocument) else doc
    lines = []
    if isinstance(doc, GraphMapDocument):
        lines += [f"# {c}" for c in doc.comments]
        if doc.name:
            lines.append(f"name {doc.name}")
    g = f.graph
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e} {g.tail[e]} {g.head[e]}" for e in g.edges]
    for e in g.edges:
        toks = [x if s > 0 else f"~{x}" for x, s in f.edge_image[e]]
        lines.append(f"image {e} " + " ".join(toks))
    if isinstance(doc, GraphMapDocument):
        if doc.basepoint is not None:
            lines.append(f"basepoint {doc.basepoint}")
        if doc.tree is not None:
            lines.append(" ".join(("tree",) + tuple(doc.tree)))
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> GraphMapDocument:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), source=str(path))


FIXTURES = (
    "o_and_none",
    "o_and_none_inverse",
    "anti_anti",
    "anti_anti_inverse",
    "antiO",
    "antiO_inverse",
    "identity_circle",
    "doubling",
    "reversal",
    "swap_rose",
)


def load_fixture_document(name: str) -> GraphMapDocument:
    """One of the bundled example documents, by name (see ``FIXTURES``)."""
    if name not in FIXTURES:
        raise ValidationError(f"unknown fixture {name!r}")
    text = resources.files("freebycyclic").joinpath("data", f"{name}.gm").read_text(encoding="utf-8")
    return parse(text, source=name)


def load_fixture(name: str) -> GraphMap:
    return load_fixture_document(name).graph_map
