"""Homology of the mapping torus and the Z[K]-matrices of a lifted graph map.

H = H_1(X_f)/torsion splits as K + <z>, where K is the image of H_1(G) and
the deck element z is fixed by the choice of lift of f to the K-cover of G.
Group elements are integer vectors (K-coordinates first, z last); the
distinguished class u0 takes the value -1 on z and vanishes on K.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
import sympy

from .errors import TheoryViolation, ValidationError
from .graph_core import (
    EdgePath,
    GraphMap,
    IntMatrix,
    signed_chain_matrix,
    transition_matrix,
    vertex_action_matrix,
)
from .laurent import LaurentPoly, bareiss_det, char_matrix, equivalent
from .lattice import left_kernel

Vector = tuple[int, ...]


def k_names(k: int) -> tuple[str, ...]:
    if k == 1:
        return ("a",)
    return tuple(f"a{i}" for i in range(1, k + 1))


@dataclass(frozen=True, eq=False)
class TorusPresentation:
    """Splitting data for H = K + <z> attached to one lift of f."""

    graph_map: GraphMap
    variables: tuple[str, ...]
    basepoint: str
    spanning_tree: frozenset[str]
    tree_paths: Mapping[str, EdgePath]
    loop_generators: tuple[str, ...]
    homology_action: IntMatrix
    project_K: tuple[tuple[int, ...], ...]
    cocycle: Mapping[str, Vector]
    potentials: Mapping[str, Vector]

    @property
    def rank(self) -> int:
        return len(self.variables)

    @property
    def k_rank(self) -> int:
        return len(self.variables) - 1

    @property
    def zbar(self) -> Vector:
        return (0,) * self.k_rank + (1,)

    @property
    def dual_class(self) -> Vector:
        return (0,) * self.k_rank + (-1,)

    def element(self, k_part: Sequence[int], z: int = 0) -> Vector:
        return tuple(k_part) + (z,)

    def monomial(self, k_part: Sequence[int], z: int = 0, coeff: int = 1) -> LaurentPoly:
        return LaurentPoly.monomial(self.element(k_part, z), self.variables, coeff)

    @property
    def z(self) -> LaurentPoly:
        return LaurentPoly.gen(self.variables[-1], self.variables)

    def path_class(self, path: Iterable) -> Vector:
        """K-offset accumulated along an edge path."""
        out = [0] * self.k_rank
        for e, s in path:
            for i, c in enumerate(self.cocycle[e]):
                out[i] += s * c
        return tuple(out)


def _tree_paths(f: GraphMap, root: str, tree: Iterable[str]) -> dict[str, EdgePath]:
    g = f.graph
    tree = set(tree)
    paths: dict[str, EdgePath] = {root: ()}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for e in sorted(tree):
                for step in ((e, 1), (e, -1)):
                    if g.start(step) == v and g.end(step) not in paths:
                        paths[g.end(step)] = paths[v] + (step,)
                        nxt.append(g.end(step))
        frontier = nxt
    if len(paths) != len(g.vertices) or len(tree) != len(g.vertices) - 1:
        raise ValidationError(f"edges {sorted(tree)} do not form a spanning tree")
    return paths


def compute_presentation(
    f: GraphMap, basepoint: str | None = None, tree: Iterable[str] | None = None
) -> TorusPresentation:
    """Splitting H = K + <z> from a spanning tree and basepoint.

    Defaults: basepoint is the smallest vertex name, tree is the BFS tree in
    name order.  K is the free part of coker(f_* - I); its basis is the
    Hermite form of the left kernel of f_* - I, so it is canonical once the
    tree is fixed.
    """
    g = f.graph
    if basepoint is None:
        basepoint = min(g.vertices)
    if tree is None:
        root, paths = g.spanning_tree(basepoint)
    else:
        paths = _tree_paths(f, basepoint, tree)
    tree_edges = frozenset(e for p in paths.values() for e, _ in p)
    gens = tuple(e for e in g.edges if e not in tree_edges)
    E = g.edges

    # loop z_e = tau(tail e) . e . tau(head e)^-1 as an edge chain
    Z = np.zeros((len(E), len(gens)), dtype=np.int64)
    for j, e in enumerate(gens):
        Z[E.index(e), j] += 1
        for x, s in paths[g.tail[e]]:
            Z[E.index(x), j] += s
        for x, s in paths[g.head[e]]:
            Z[E.index(x), j] -= s
    M = signed_chain_matrix(f).data
    idx = [E.index(e) for e in gens]
    fstar = (M @ Z)[idx, :]
    N = fstar - np.eye(len(gens), dtype=np.int64)
    qK = left_kernel(N.tolist()) if gens else []
    k = len(qK)
    cocycle = {e: (0,) * k for e in E}
    for j, e in enumerate(gens):
        cocycle[e] = tuple(int(row[j]) for row in qK)

    def offset(path):
        out = [0] * k
        for x, s in path:
            for i, c in enumerate(cocycle[x]):
                out[i] += s * c
        return tuple(out)

    potentials = {v: offset(f.apply(paths[v])) for v in g.vertices}
    return TorusPresentation(
        graph_map=f,
        variables=k_names(k) + ("z",),
        basepoint=basepoint,
        spanning_tree=tree_edges,
        tree_paths=paths,
        loop_generators=gens,
        homology_action=IntMatrix(gens, gens, fstar),
        project_K=tuple(tuple(int(x) for x in row) for row in qK),
        cocycle=cocycle,
        potentials=potentials,
    )


@dataclass(frozen=True, eq=False)
class LiftedMatrices:
    """Matrices of the lifted map over Z[K], embedded in Z[H] with z-exponent 0."""

    edges: tuple[str, ...]
    vertices: tuple[str, ...]
    Mlift: list[list[LaurentPoly]]
    Alift: list[list[LaurentPoly]]
    Plift: list[list[LaurentPoly]]

    def entry(self, which: str, row: str, col: str) -> LaurentPoly:
        mat = getattr(self, which)
        names = self.vertices if which == "Plift" else self.edges
        return mat[names.index(row)][names.index(col)]


def _augment(mat: list[list[LaurentPoly]]) -> list[list[int]]:
    return [[p.coefficient_sum() for p in row] for row in mat]


def lifted_matrices(pres: TorusPresentation, f: GraphMap | None = None) -> LiftedMatrices:
    """Walk each edge image in the K-cover, recording the translate of every crossing."""
    f = pres.graph_map if f is None else f
    g = f.graph
    E, V = g.edges, g.vertices
    names = pres.variables
    zero = LaurentPoly.zero(names)
    Mt: list[list[dict]] = [[{} for _ in E] for _ in E]
    At: list[list[dict]] = [[{} for _ in E] for _ in E]
    for j, e in enumerate(E):
        off = list(pres.potentials[g.tail[e]])
        for x, s in f.edge_image[e]:
            c = pres.cocycle[x]
            if s < 0:
                off = [a - b for a, b in zip(off, c)]
            key = tuple(off) + (0,)
            i = E.index(x)
            Mt[i][j][key] = Mt[i][j].get(key, 0) + s
            At[i][j][key] = At[i][j].get(key, 0) + 1
            if s > 0:
                off = [a + b for a, b in zip(off, c)]
        # f acts trivially on K, so the lifted image ends at psi(head) + c(e)
        target = tuple(a + b for a, b in zip(pres.potentials[g.head[e]], pres.cocycle[e]))
        if tuple(off) != target:
            raise TheoryViolation(f"lift of f({e}) does not end at the lift of f({g.head[e]})")
    Mlift = [[LaurentPoly(Mt[i][j], names) for j in range(len(E))] for i in range(len(E))]
    Alift = [[LaurentPoly(At[i][j], names) for j in range(len(E))] for i in range(len(E))]
    Plift = [[zero for _ in V] for _ in V]
    for j, v in enumerate(V):
        Plift[V.index(f.vertex_image[v])][j] = LaurentPoly.monomial(tuple(pres.potentials[v]) + (0,), names)
    lifted = LiftedMatrices(E, V, Mlift, Alift, Plift)
    if (
        _augment(Mlift) != signed_chain_matrix(f).tolist()
        or _augment(Alift) != transition_matrix(f).tolist()
        or _augment(Plift) != vertex_action_matrix(f).tolist()
    ):
        raise TheoryViolation("augmentation of the lifted matrices does not recover M, A, P")
    return lifted


@dataclass(frozen=True)
class VertexCycle:
    orbit: tuple[str, ...]
    element: Vector


def vertex_cycles(pres: TorusPresentation, f: GraphMap | None = None) -> list[VertexCycle]:
    """Periodic orbits of the vertex action with their classes in H.

    The class of the orbit v, f(v), ..., f^l(v) = v is the sum of potentials
    along it in K, with z-exponent -l.
    """
    f = pres.graph_map if f is None else f
    seen: set[str] = set()
    cycles = []
    for v in sorted(f.graph.vertices):
        path = []
        pos: dict[str, int] = {}
        x = v
        while x not in pos and x not in seen:
            pos[x] = len(path)
            path.append(x)
            x = f.vertex_image[x]
        if x in pos:
            orbit = path[pos[x]:]
            start = orbit.index(min(orbit))
            orbit = orbit[start:] + orbit[:start]
            k_part = [0] * pres.k_rank
            for w in orbit:
                k_part = [a + b for a, b in zip(k_part, pres.potentials[w])]
            cycles.append(VertexCycle(tuple(orbit), tuple(k_part) + (-len(orbit),)))
        seen.update(path)
    return cycles


def vertex_cycle_product(pres: TorusPresentation, cycles: Sequence[VertexCycle] | None = None) -> LaurentPoly:
    """prod (1 - c_i) over vertex cycles."""
    cycles = vertex_cycles(pres) if cycles is None else cycles
    out = LaurentPoly.constant(1, pres.variables)
    for c in cycles:
        out = out * (1 - LaurentPoly.monomial(c.element, pres.variables))
    return out


def char_det(pres: TorusPresentation, mat: list[list[LaurentPoly]]) -> LaurentPoly:
    """det(z I - mat) over Z[H]."""
    return bareiss_det(char_matrix(mat, pres.z), pres.variables)


def check_vertex_identity(pres: TorusPresentation, lifted: LiftedMatrices) -> bool:
    """det(zI - Plift) agrees with prod(1 - c_i) up to a unit."""
    return equivalent(char_det(pres, lifted.Plift), vertex_cycle_product(pres))


def coordinate_change(src: TorusPresentation, dst: TorusPresentation) -> list[list[int]]:
    """Integer matrix T with T h = h' for H-coordinates in ``src`` and ``dst``.

    The K-block comes from evaluating both cocycles on a loop basis of G.  The
    z-column is fixed by matching the class of a vertex cycle, since vertex
    cycles are intrinsic to the mapping torus.
    """
    if src.graph_map is not dst.graph_map and src.graph_map.edge_image != dst.graph_map.edge_image:
        raise ValidationError("presentations of different maps")
    from .graph_core import cycle_basis

    k = src.k_rank
    if dst.k_rank != k:
        raise TheoryViolation("K ranks differ between presentations")
    gens, Z = cycle_basis(src.graph_map.graph)
    E = src.graph_map.graph.edges
    C1 = sympy.Matrix([[src.cocycle[e][i] for e in E] for i in range(k)]) if k else sympy.zeros(0, len(E))
    C2 = sympy.Matrix([[dst.cocycle[e][i] for e in E] for i in range(k)]) if k else sympy.zeros(0, len(E))
    Zm = sympy.Matrix(Z.tolist())
    K1, K2 = C1 * Zm, C2 * Zm
    g = K2 * K1.T * (K1 * K1.T).inv() if k else sympy.zeros(0, 0)
    if g * K1 != K2 or any(not x.is_integer for x in g):
        raise TheoryViolation("no integral change of K-basis between presentations")
    c1 = {c.orbit: c.element for c in vertex_cycles(src)}
    c2 = {c.orbit: c.element for c in vertex_cycles(dst)}
    shift = None
    for orbit, h in c1.items():
        length = -h[-1]
        num = g * sympy.Matrix(h[:k]) - sympy.Matrix(c2[orbit][:k]) if k else sympy.zeros(0, 1)
        s = num / length
        if any(not x.is_integer for x in s) or (shift is not None and s != shift):
            raise TheoryViolation("vertex cycles do not determine a consistent z-shift")
        shift = s
    T = [[int(g[i, j]) for j in range(k)] + [int(shift[i])] for i in range(k)]
    T.append([0] * k + [1])
    return T


def change_coordinates(p: LaurentPoly, T: Sequence[Sequence[int]], variables: Sequence[str] | None = None) -> LaurentPoly:
    """Image of ``p`` under the group isomorphism h -> T h."""
    n = len(T)
    return p.map_exponents(
        lambda e: tuple(sum(T[i][j] * e[j] for j in range(n)) for i in range(n)),
        variables,
    )
