"""Positive/negative orientability of graph maps and the oriented edge-double."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import ReducibleInput
from .graph_core import (
    Graph,
    GraphMap,
    IntMatrix,
    char_poly,
    irreducibility_report,
    monodromy_char_poly,
    signed_chain_matrix,
    transition_matrix,
)
from .laurent import apply_involution
from . import roots


class Orientability(enum.Enum):
    POS = "pos"
    NEG = "neg"
    NONE = "none"


@dataclass(frozen=True)
class OrientabilityClass:
    kind: Orientability
    assignment: Mapping[str, int] | None = None

    @property
    def orientable(self) -> bool:
        return self.kind is not Orientability.NONE


def _propagate(f: GraphMap, parity: int) -> dict[str, int] | None:
    """Solve x[e'] = parity * s * x[e] over all crossings of e' by f(e) with sign s."""
    E = f.graph.edges
    nbrs: dict[str, list[tuple[str, int]]] = {e: [] for e in E}
    for e in E:
        for x, s in f.edge_image[e]:
            nbrs[e].append((x, parity * s))
            nbrs[x].append((e, parity * s))
    seed = min(E)
    x = {seed: 1}
    queue = deque([seed])
    while queue:
        e = queue.popleft()
        for y, rel in nbrs[e]:
            want = rel * x[e]
            if y not in x:
                x[y] = want
                queue.append(y)
            elif x[y] != want:
                return None
    if len(x) != len(E):
        raise ReducibleInput("sign propagation did not reach every edge")
    return {e: x[e] for e in E}


def classify_orientability(f: GraphMap) -> OrientabilityClass:
    """Find an orientation making every edge image positive, else negative.

    The returned assignment flips edge ``e`` when its value is -1; the seed is
    the smallest edge name, which keeps its stored orientation.
    """
    if not irreducibility_report(transition_matrix(f)).irreducible:
        raise ReducibleInput("transition matrix is not irreducible")
    pos = _propagate(f, 1)
    if pos is not None:
        return OrientabilityClass(Orientability.POS, pos)
    neg = _propagate(f, -1)
    if neg is not None:
        return OrientabilityClass(Orientability.NEG, neg)
    return OrientabilityClass(Orientability.NONE, None)


@dataclass(frozen=True)
class EdgeDouble:
    """Edge-double G^ with its involution and the orientation lift of f.

    Edge ``e+`` runs tail -> head over ``e``; ``e-`` runs head -> tail over the
    reverse of ``e``.
    """

    graph: Graph
    lift: GraphMap
    involution: GraphMap
    matrix: IntMatrix
    projection: Mapping[str, tuple[str, int]]

    def project_path(self, path):
        out = []
        for eh, s in path:
            e, t = self.projection[eh]
            out.append((e, t * s))
        return tuple(out)


def _plus(e: str) -> str:
    return f"{e}+"


def _minus(e: str) -> str:
    return f"{e}-"


def positive_lift(path) -> tuple:
    return tuple(((_plus(e) if s > 0 else _minus(e)), 1) for e, s in path)


def oriented_edge_double(f: GraphMap) -> EdgeDouble:
    g = f.graph
    ends = {}
    proj = {}
    for e in g.edges:
        ends[_plus(e)] = (g.tail[e], g.head[e])
        ends[_minus(e)] = (g.head[e], g.tail[e])
        proj[_plus(e)] = (e, 1)
        proj[_minus(e)] = (e, -1)
    dg = Graph.from_edges(ends, g.vertices)
    images = {}
    for e in g.edges:
        img = f.edge_image[e]
        images[_plus(e)] = positive_lift(img)
        images[_minus(e)] = positive_lift(tuple((x, -s) for x, s in reversed(img)))
    lift = GraphMap(dg, images)
    sigma = GraphMap(dg, {_plus(e): ((_minus(e), -1),) for e in g.edges} | {_minus(e): ((_plus(e), -1),) for e in g.edges})
    return EdgeDouble(dg, lift, sigma, transition_matrix(lift), proj)


@dataclass(frozen=True)
class TheoremAReport:
    kind: Orientability
    passed: bool
    char_poly_A: object
    char_poly_M: object
    lam: float
    rho: float

    @property
    def gap(self) -> float:
        return self.lam - self.rho


def verify_theorem_A(f: GraphMap, tol: float = 1e-6) -> TheoremAReport:
    """Check the spectral identities linking orientability and stretch factors.

    pos: det(tI - M) = det(tI - A); neg: det(tI - M) = (-1)^|E| det(-tI - A);
    non-orientable: lambda exceeds every root modulus of f_* by more than
    ``tol``.  Orientable maps need an irreducible transition matrix, the
    non-orientable case a primitive one.
    """
    A = transition_matrix(f)
    cls = classify_orientability(f)
    cA = char_poly(A)
    cM = char_poly(signed_chain_matrix(f))
    sums = A.data.sum(axis=0)
    lam = roots.largest_real_root(cA, lower=int(sums.min()), upper=int(sums.max()))
    rho = roots.max_modulus(monodromy_char_poly(f))
    if cls.kind is Orientability.POS:
        ok = cM == cA
    elif cls.kind is Orientability.NEG:
        n = len(f.graph.edges)
        # det(-tI - A) = (-1)^n det(tI + A): substitute t -> -t term by term
        flipped = apply_involution(cA, (1,))
        ok = cM == flipped.scale((-1) ** n)
    else:
        if not irreducibility_report(A).primitive:
            raise ReducibleInput("non-orientable case needs a primitive transition matrix")
        ok = lam - rho > tol
    return TheoremAReport(cls.kind, bool(ok), cA, cM, lam, rho)
