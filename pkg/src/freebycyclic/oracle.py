"""Brute-force cross-checks for the determinant pipeline.

These are deliberately naive: cycle enumeration instead of elimination,
permutation sums instead of Bareiss, explicit iteration instead of spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .errors import TooLarge
from .graph_core import (
    GraphMap,
    char_poly,
    geometric_stretch,
    irreducibility_report,
    signed_chain_matrix,
    transition_matrix,
)
from .laurent import LaurentPoly, equivalent

MAX_CYCLE_EDGES = 12
MAX_PERMUTATION_DIM = 8
MAX_ITERATES = 12


def simple_cycles(adj: dict[int, set[int]]) -> list[list[int]]:
    """All simple directed cycles, each listed once from its smallest vertex."""
    out = []
    for anchor in sorted(adj):
        stack = [(anchor, [anchor])]
        while stack:
            v, path = stack.pop()
            for w in sorted(adj[v]):
                if w == anchor:
                    out.append(path)
                elif w > anchor and w not in path:
                    stack.append((w, path + [w]))
    return out


def multicycle_expansion(Alift: Sequence[Sequence[LaurentPoly]], n_edges: int | None = None) -> LaurentPoly:
    """1 + sum over disjoint cycle families of (-1)^{#cycles} times the weight product.

    Arc e -> e' carries weight Alift[e'][e] z^{-1}; the result is
    det(I - z^{-1} Alift), the normalized McMullen polynomial.
    """
    n = len(Alift) if n_edges is None else n_edges
    if n > MAX_CYCLE_EDGES:
        raise TooLarge(f"cycle expansion is limited to {MAX_CYCLE_EDGES} edges, got {n}")
    variables = Alift[0][0].variables
    zinv = LaurentPoly.monomial((0,) * (len(variables) - 1) + (-1,), variables)
    weight = {}
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(n):
            if not Alift[j][i].is_zero():
                adj[i].add(j)
                weight[i, j] = Alift[j][i] * zinv
    # total weight of the cycles on each vertex set
    by_set: dict[int, LaurentPoly] = {}
    for cyc in simple_cycles(adj):
        w = LaurentPoly.constant(1, variables)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            w = w * weight[a, b]
        mask = sum(1 << v for v in cyc)
        by_set[mask] = by_set.get(mask, LaurentPoly.zero(variables)) + w
    # families with union exactly `mask`, built by peeling the cycle through the lowest vertex
    family: dict[int, LaurentPoly] = {0: LaurentPoly.constant(1, variables)}
    total = LaurentPoly.constant(1, variables)
    for mask in range(1, 1 << n):
        low = mask & -mask
        acc = LaurentPoly.zero(variables)
        for cmask, w in by_set.items():
            if cmask & low and cmask & mask == cmask:
                rest = family.get(mask ^ cmask)
                if rest is not None and not rest.is_zero():
                    acc = acc - w * rest
        if not acc.is_zero():
            family[mask] = acc
            total = total + acc
    return total


def brute_char_poly(M, var: str = "t") -> LaurentPoly:
    """det(tI - M) as a signed sum over permutations."""
    data = [[int(x) for x in row] for row in (M.tolist() if hasattr(M, "tolist") else M)]
    n = len(data)
    if n > MAX_PERMUTATION_DIM:
        raise TooLarge(f"permutation expansion is limited to {MAX_PERMUTATION_DIM}x{MAX_PERMUTATION_DIM}")
    names = (var,)
    t = LaurentPoly.gen(var, names)
    entry = [[(t if i == j else 0) - data[i][j] for j in range(n)] for i in range(n)]
    entry = [[e if isinstance(e, LaurentPoly) else LaurentPoly.constant(e, names) for e in row] for row in entry]
    total = LaurentPoly.zero(names)

    def walk(i: int, used: int, perm: list[int], prod: LaurentPoly):
        nonlocal total
        if i == n:
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            total = total + (prod if inversions % 2 == 0 else -prod)
            return
        for j in range(n):
            if not used >> j & 1 and not entry[i][j].is_zero():
                walk(i + 1, used | 1 << j, perm + [j], prod * entry[i][j])

    walk(0, 0, [], LaurentPoly.constant(1, names))
    return total


def iterate_growth(f: GraphMap, e: str, n: int) -> list[int]:
    """Lengths of f^k(e) for k = 0..n, counting crossings without reduction."""
    if n > MAX_ITERATES:
        raise TooLarge(f"at most {MAX_ITERATES} iterates")
    counts = {x: 0 for x in f.graph.edges}
    counts[e] = 1
    lengths = [1]
    for _ in range(n):
        nxt = {x: 0 for x in f.graph.edges}
        for x, c in counts.items():
            if c:
                for y, _s in f.edge_image[x]:
                    nxt[y] += c
        counts = nxt
        lengths.append(sum(counts.values()))
    return lengths


def growth_ratios(lengths: Sequence[int]) -> list[float]:
    return [b / a for a, b in zip(lengths, lengths[1:])]


@dataclass(frozen=True)
class OracleReport:
    name: str
    expected: Any
    got: Any
    passed: bool


def run_oracles(f: GraphMap, pres=None, lifted=None) -> list[OracleReport]:
    """Every oracle that applies to ``f`` within its size limits."""
    from .invariants import mcmullen_polynomial
    from .torus import char_det, compute_presentation, lifted_matrices, vertex_cycle_product

    pres = compute_presentation(f) if pres is None else pres
    lifted = lifted_matrices(pres) if lifted is None else lifted
    reports = []
    n = len(f.graph.edges)
    if n <= MAX_CYCLE_EDGES:
        _, m_norm = mcmullen_polynomial(pres, lifted)
        got = multicycle_expansion(lifted.Alift)
        reports.append(OracleReport("multicycle_expansion", str(m_norm), str(got), got == m_norm))
    if n <= MAX_PERMUTATION_DIM:
        for label, mat in (("A", transition_matrix(f)), ("M", signed_chain_matrix(f))):
            want, got = char_poly(mat), brute_char_poly(mat)
            reports.append(OracleReport(f"brute_char_poly({label})", str(want), str(got), want == got))
    want, got = char_det(pres, lifted.Plift), vertex_cycle_product(pres)
    reports.append(OracleReport("vertex_cycle_product", str(want), str(got), equivalent(want, got)))
    if irreducibility_report(transition_matrix(f)).primitive:
        lam = geometric_stretch(f)
        ratio = growth_ratios(iterate_growth(f, f.graph.edges[0], 10))[-1]
        reports.append(OracleReport("iterate_growth", lam, ratio, abs(ratio - lam) <= 0.1 * lam))
    return reports
