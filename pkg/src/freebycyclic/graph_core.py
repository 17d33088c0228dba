"""Finite graphs, edge paths and graph self-maps.

An edge path is a tuple of ``(edge, sign)`` steps; sign ``+1`` traverses the
edge from tail to head, ``-1`` from head to tail.  A *direction* is a step
viewed as the germ leaving its initial vertex, so the directions at a vertex
``v`` are ``(e, +1)`` for edges with tail ``v`` and ``(e, -1)`` for edges with
head ``v``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Sequence

import numpy as np

from .errors import InconsistentEndpoints, NonexactDivision, UnknownEdge, ValidationError
from .laurent import LaurentPoly, bareiss_det, char_matrix, monic_div_in_z
from . import roots

Step = tuple[str, int]
EdgePath = tuple[Step, ...]
Direction = tuple[str, int]


@dataclass(frozen=True)
class Graph:
    """A finite connected graph with named vertices and oriented edges."""

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    tail: Mapping[str, str]
    head: Mapping[str, str]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex names")
        if len(set(self.edges)) != len(self.edges):
            raise ValidationError("duplicate edge names")
        if set(self.vertices) & set(self.edges):
            raise ValidationError("vertex and edge names must be distinct")
        vs = set(self.vertices)
        for e in self.edges:
            if self.tail.get(e) not in vs or self.head.get(e) not in vs:
                raise ValidationError(f"edge {e!r} has an endpoint that is not a vertex")
        if not self.vertices:
            raise ValidationError("graph has no vertices")
        if len(self._component(self.vertices[0])) != len(self.vertices):
            raise ValidationError("graph is not connected")

    @classmethod
    def from_edges(cls, edges: Mapping[str, tuple[str, str]], vertices: Sequence[str] | None = None) -> Graph:
        """Build from ``{edge: (tail, head)}``; vertices default to those used."""
        if vertices is None:
            seen: list[str] = []
            for t, h in edges.values():
                for v in (t, h):
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        return cls(
            vertices=tuple(vertices),
            edges=tuple(edges),
            tail={e: th[0] for e, th in edges.items()},
            head={e: th[1] for e, th in edges.items()},
        )

    def _component(self, v: str) -> set[str]:
        adj: dict[str, set[str]] = {x: set() for x in self.vertices}
        for e in self.edges:
            adj[self.tail[e]].add(self.head[e])
            adj[self.head[e]].add(self.tail[e])
        seen = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for y in adj[x] - seen:
                seen.add(y)
                todo.append(y)
        return seen

    @property
    def rank(self) -> int:
        """Rank of the free group pi_1, i.e. of H_1."""
        return len(self.edges) - len(self.vertices) + 1

    def start(self, step: Step) -> str:
        e, s = step
        return self.tail[e] if s > 0 else self.head[e]

    def end(self, step: Step) -> str:
        e, s = step
        return self.head[e] if s > 0 else self.tail[e]

    def directions_at(self, v: str) -> list[Direction]:
        out = [(e, 1) for e in self.edges if self.tail[e] == v]
        out += [(e, -1) for e in self.edges if self.head[e] == v]
        return out

    def check_path(self, path: Sequence[Step]) -> None:
        for e, s in path:
            if e not in self.tail:
                raise UnknownEdge(f"unknown edge {e!r}")
            if s not in (1, -1):
                raise ValidationError(f"bad sign {s!r} on edge {e!r}")
        for a, b in zip(path, path[1:]):
            if self.end(a) != self.start(b):
                raise InconsistentEndpoints(f"steps {a} and {b} are not composable")

    def spanning_tree(self, root: str | None = None) -> tuple[str, dict[str, EdgePath]]:
        """BFS spanning tree in name order.

        Returns the root and, for every vertex ``v``, the tree path from the
        root to ``v``.
        """
        root = min(self.vertices) if root is None else root
        incident = sorted(
            [(e, 1) for e in self.edges] + [(e, -1) for e in self.edges], key=lambda d: (d[0], -d[1])
        )
        paths: dict[str, EdgePath] = {root: ()}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for step in incident:
                if self.start(step) == v and self.end(step) not in paths:
                    paths[self.end(step)] = paths[v] + (step,)
                    queue.append(self.end(step))
        return root, paths


def reverse_path(path: Sequence[Step]) -> EdgePath:
    return tuple((e, -s) for e, s in reversed(path))


def reduce_path(path: Sequence[Step]) -> EdgePath:
    """Free reduction: cancel adjacent ``e e^-1`` pairs."""
    out: list[Step] = []
    for e, s in path:
        if out and out[-1] == (e, -s):
            out.pop()
        else:
            out.append((e, s))
    return tuple(out)


def turns(path: Sequence[Step]) -> list[tuple[Direction, Direction]]:
    """Turns crossed by a path: pairs (incoming germ reversed, outgoing germ)."""
    return [((a[0], -a[1]), b) for a, b in zip(path, path[1:])]


@dataclass(frozen=True)
class GraphMap:
    """A self-map of a finite graph sending edges to nondegenerate edge paths."""

    graph: Graph
    edge_image: Mapping[str, EdgePath]
    vertex_image: Mapping[str, str] = field(default=None)

    def __post_init__(self):
        g = self.graph
        images = {e: tuple((x, int(s)) for x, s in self.edge_image[e]) for e in g.edges if e in self.edge_image}
        missing = set(g.edges) - set(images)
        if missing:
            raise ValidationError(f"no image given for edges {sorted(missing)}")
        extra = set(self.edge_image) - set(g.edges)
        if extra:
            raise UnknownEdge(f"images given for unknown edges {sorted(extra)}")
        vimg = dict(self.vertex_image) if self.vertex_image is not None else {}
        for e in g.edges:
            path = images[e]
            if not path:
                raise ValidationError(f"edge {e!r} has a degenerate (empty) image")
            try:
                g.check_path(path)
            except InconsistentEndpoints as err:
                raise InconsistentEndpoints(f"image of edge {e!r}: {err}") from None
            for v, w in ((g.tail[e], g.start(path[0])), (g.head[e], g.end(path[-1]))):
                if vimg.setdefault(v, w) != w:
                    raise InconsistentEndpoints(
                        f"image of edge {e!r} puts vertex {v!r} at {w!r}, but it is also sent to {vimg[v]!r}"
                    )
        unmapped = set(g.vertices) - set(vimg)
        if unmapped:
            raise ValidationError(f"vertices {sorted(unmapped)} have no determined image")
        object.__setattr__(self, "edge_image", images)
        object.__setattr__(self, "vertex_image", vimg)

    @classmethod
    def from_words(cls, graph: Graph, words: Mapping[str, str]) -> GraphMap:
        """Images as letter words; uppercase letter means the reversed lowercase edge."""
        return cls(graph, {e: parse_word(w, graph.edges) for e, w in words.items()})

    def apply(self, path: Sequence[Step]) -> EdgePath:
        out: list[Step] = []
        for e, s in path:
            img = self.edge_image[e]
            out.extend(img if s > 0 else reverse_path(img))
        return tuple(out)

    def direction_map(self, d: Direction) -> Direction:
        """Df: first step of the image of the germ ``d``."""
        img = self.edge_image[d[0]]
        return img[0] if d[1] > 0 else (img[-1][0], -img[-1][1])

    def compose(self, other: GraphMap) -> GraphMap:
        """``self o other`` (apply ``other`` first), without reduction."""
        return GraphMap(self.graph, {e: self.apply(other.edge_image[e]) for e in self.graph.edges})

    def power(self, k: int) -> GraphMap:
        if k < 1:
            raise ValueError("power must be positive")
        out = self
        for _ in range(k - 1):
            out = self.compose(out)
        return out

    def reorient(self, flips: Mapping[str, int]) -> GraphMap:
        """The same map written after reversing every edge with flip -1."""
        g = self.graph
        tail = {e: (g.tail[e] if flips[e] > 0 else g.head[e]) for e in g.edges}
        head = {e: (g.head[e] if flips[e] > 0 else g.tail[e]) for e in g.edges}
        newg = Graph(g.vertices, g.edges, tail, head)
        images = {}
        for e in g.edges:
            img = self.edge_image[e] if flips[e] > 0 else reverse_path(self.edge_image[e])
            images[e] = tuple((x, s * flips[x]) for x, s in img)
        return GraphMap(newg, images)


def parse_word(word: str, edges: Sequence[str]) -> EdgePath:
    """Letters of ``word``; an uppercase letter is the reverse of its lowercase edge."""
    out = []
    for ch in word:
        if ch in edges:
            out.append((ch, 1))
        elif ch.lower() in edges and ch.isupper():
            out.append((ch.lower(), -1))
        else:
            raise UnknownEdge(f"letter {ch!r} is not an edge")
    return tuple(out)


def path_word(path: Sequence[Step]) -> str:
    return "".join(e if s > 0 else e.upper() for e, s in path)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Integer matrix with named rows and columns."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.int64)
        if arr.shape != (len(self.rows), len(self.cols)):
            raise ValueError(f"shape {arr.shape} does not match index sets")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    def __getitem__(self, key: tuple[str, str]) -> int:
        r, c = key
        return int(self.data[self.rows.index(r), self.cols.index(c)])

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.data, other.data)
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("index sets do not compose")
        return IntMatrix(self.rows, other.cols, self.data @ other.data)

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __repr__(self):
        return f"IntMatrix(rows={self.rows}, cols={self.cols},\n{self.data})"


def transition_matrix(f: GraphMap) -> IntMatrix:
    """A[e', e] = number of times f(e) crosses e' in either direction."""
    E = f.graph.edges
    A = np.zeros((len(E), len(E)), dtype=np.int64)
    for j, e in enumerate(E):
        for x, _ in f.edge_image[e]:
            A[E.index(x), j] += 1
    return IntMatrix(E, E, A)


def signed_chain_matrix(f: GraphMap) -> IntMatrix:
    """M[e', e] = signed number of crossings of e' by f(e); f on 1-chains."""
    E = f.graph.edges
    M = np.zeros((len(E), len(E)), dtype=np.int64)
    for j, e in enumerate(E):
        for x, s in f.edge_image[e]:
            M[E.index(x), j] += s
    return IntMatrix(E, E, M)


def vertex_action_matrix(f: GraphMap) -> IntMatrix:
    """P[v, w] = 1 iff f(w) = v; f on 0-chains."""
    V = f.graph.vertices
    P = np.zeros((len(V), len(V)), dtype=np.int64)
    for j, w in enumerate(V):
        P[V.index(f.vertex_image[w]), j] = 1
    return IntMatrix(V, V, P)


def cycle_basis(graph: Graph, root: str | None = None) -> tuple[list[str], np.ndarray]:
    """Loop basis of H_1 from the BFS spanning tree.

    Returns the non-tree edges and a matrix whose column for non-tree edge ``e``
    is the edge-chain of the loop ``tau(tail e) . e . tau(head e)^-1``.
    """
    root, paths = graph.spanning_tree(root)
    tree = {e for p in paths.values() for e, _ in p}
    E = graph.edges
    gens = [e for e in E if e not in tree]
    Z = np.zeros((len(E), len(gens)), dtype=np.int64)
    for j, e in enumerate(gens):
        Z[E.index(e), j] += 1
        for x, s in paths[graph.tail[e]]:
            Z[E.index(x), j] += s
        for x, s in paths[graph.head[e]]:
            Z[E.index(x), j] -= s
    return gens, Z


def homology_action(f: GraphMap, root: str | None = None) -> IntMatrix:
    """Matrix of f_* on H_1(G; Z) in the spanning-tree loop basis."""
    gens, Z = cycle_basis(f.graph, root)
    M = signed_chain_matrix(f).data
    E = f.graph.edges
    idx = [E.index(e) for e in gens]
    # a cycle's coordinates in the loop basis are its non-tree coefficients
    fz = (M @ Z)[idx, :]
    return IntMatrix(tuple(gens), tuple(gens), fz)


def char_poly(M: IntMatrix | np.ndarray | Sequence[Sequence[int]], var: str = "t") -> LaurentPoly:
    """det(tI - M) exactly, by fraction-free elimination over Z[t]."""
    data = M.data if isinstance(M, IntMatrix) else np.asarray(M, dtype=object)
    n = data.shape[0] if getattr(data, "ndim", 2) == 2 and len(data) else 0
    names = (var,)
    if n == 0:
        return LaurentPoly.constant(1, names)
    entries = [[LaurentPoly.constant(int(data[i][j]), names) for j in range(n)] for i in range(n)]
    return bareiss_det(char_matrix(entries, LaurentPoly.gen(var, names)))


def monodromy_char_poly(f: GraphMap, var: str = "t") -> LaurentPoly:
    """Characteristic polynomial of f_* on H_1(G), as (t-1) det(tI-M) / det(tI-P)."""
    t = LaurentPoly.gen(var, (var,))
    num = (t - 1) * char_poly(signed_chain_matrix(f), var)
    try:
        return monic_div_in_z(num, char_poly(vertex_action_matrix(f), var))
    except NonexactDivision as err:
        raise NonexactDivision(f"chain-complex identity failed: {err}") from None


# ---------------------------------------------------------------------------
# Perron-Frobenius structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    period: int
    primitive: bool


def _reach(adj: list[list[int]], start: int) -> list[int | None]:
    level: list[int | None] = [None] * len(adj)
    level[start] = 0
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if level[j] is None:
                level[j] = level[i] + 1
                queue.append(j)
    return level


def irreducibility_report(A: IntMatrix | np.ndarray) -> IrreducibilityReport:
    """Strong connectivity and period of the digraph of a nonnegative matrix.

    The digraph has an arc ``j -> i`` whenever ``A[i, j] > 0``.  The period is
    the gcd of ``level(j) + 1 - level(i)`` over all arcs, with BFS levels from
    one vertex.
    """
    data = A.data if isinstance(A, IntMatrix) else np.asarray(A)
    if data.ndim != 2 or data.shape[0] != data.shape[1]:
        raise ValueError("square matrix required")
    if (data < 0).any():
        raise ValueError("matrix has negative entries")
    n = data.shape[0]
    if n == 0:
        return IrreducibilityReport(False, 0, False)
    fwd = [[i for i in range(n) if data[i, j] > 0] for j in range(n)]
    bwd = [[j for j in range(n) if data[i, j] > 0] for i in range(n)]
    level = _reach(fwd, 0)
    irreducible = all(x is not None for x in level) and all(x is not None for x in _reach(bwd, 0))
    if not irreducible:
        return IrreducibilityReport(False, 0, False)
    period = 0
    for j in range(n):
        for i in fwd[j]:
            period = gcd(period, level[j] + 1 - level[i])
    return IrreducibilityReport(True, period, period == 1)


# ---------------------------------------------------------------------------
# Train tracks and Whitehead graphs
# ---------------------------------------------------------------------------


def _turn_key(a: Direction, b: Direction) -> tuple[Direction, Direction]:
    return (a, b) if a <= b else (b, a)


def turn_closure(f: GraphMap):
    """Turns taken by all iterates f^k(e), k >= 1.

    Returns ``(turns, witness)``.  ``witness`` is None unless some turn maps to
    a degenerate turn; then it is ``(edge, iterate)`` naming the edge whose
    image contains the originating turn and the iterate of Df at which it
    degenerates.
    """
    origin: dict[tuple[Direction, Direction], tuple[str, int]] = {}
    queue: deque = deque()
    for e in f.graph.edges:
        for a, b in turns(f.edge_image[e]):
            if a == b:
                return set(origin), (e, 0)
            key = _turn_key(a, b)
            if key not in origin:
                origin[key] = (e, 0)
                queue.append(key)
    while queue:
        a, b = queue.popleft()
        e, k = origin[(a, b)]
        fa, fb = f.direction_map(a), f.direction_map(b)
        if fa == fb:
            return set(origin), (e, k + 1)
        key = _turn_key(fa, fb)
        if key not in origin:
            origin[key] = (e, k + 1)
            queue.append(key)
    return set(origin), None


def is_train_track(f: GraphMap) -> tuple[bool, tuple[str, int] | None]:
    """Whether every iterate f^k(e) is reduced.

    An unreduced image fails with witness ``(edge, 0)``; otherwise a legal turn
    in some f(e) that Df eventually collapses fails with ``(edge, k)``.
    """
    _, witness = turn_closure(f)
    return witness is None, witness


def whitehead_graphs(f: GraphMap) -> dict[str, dict[Direction, set[Direction]]]:
    """Per-vertex graphs on directions whose edges are the taken turns."""
    taken, witness = turn_closure(f)
    if witness is not None:
        raise ValidationError(f"not a train track map (witness {witness}); Whitehead graphs undefined")
    g = f.graph
    out = {v: {d: set() for d in g.directions_at(v)} for v in g.vertices}
    for a, b in taken:
        v = g.start(a)
        out[v][a].add(b)
        out[v][b].add(a)
    return out


def whitehead_graphs_connected(f: GraphMap) -> tuple[bool, dict[str, dict[Direction, set[Direction]]]]:
    graphs = whitehead_graphs(f)
    ok = True
    for adj in graphs.values():
        if not adj:
            continue
        start = next(iter(adj))
        seen = {start}
        todo = [start]
        while todo:
            d = todo.pop()
            for x in adj[d] - seen:
                seen.add(x)
                todo.append(x)
        ok &= len(seen) == len(adj)
    return ok, graphs


# ---------------------------------------------------------------------------
# Stretch factors
# ---------------------------------------------------------------------------


def geometric_stretch(f: GraphMap) -> float:
    """Perron root of the transition matrix.

    Isolated from the exact characteristic polynomial; warns if the transition
    matrix is not primitive, in which case the spectral radius is returned.
    """
    A = transition_matrix(f)
    if not irreducibility_report(A).primitive:
        warnings.warn("transition matrix is not primitive; returning its spectral radius", stacklevel=2)
    sums = A.data.sum(axis=0)
    return roots.largest_real_root(char_poly(A), lower=int(sums.min()), upper=int(sums.max()))


def homological_stretch(f: GraphMap) -> float:
    """Spectral radius of f_* on H_1(G)."""
    return roots.max_modulus(monodromy_char_poly(f))
