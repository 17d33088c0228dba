"""The cone of sections, Newton polytopes and per-class stretch factors.

Cohomology classes are integer vectors u in the dual coordinates of H, acting
on h by the dot product.  A class is in the cone when it is positive on every
nonzero exponent of the normalized McMullen polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np
import sympy

from . import roots
from .errors import MalformedNormalization, NotInCone, NotOrientableBase, NotPrimitive, TheoryViolation
from .invariants import InvariantBundle
from .laurent import LaurentPoly, specialize
from .orientation import Orientability, OrientabilityClass

Vector = tuple[int, ...]


def _dot(u: Sequence[int], h: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, h))


def primitive(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


@dataclass(frozen=True)
class ConeOfSections:
    """Open cone {u : u.s > 0 for all s in support_vectors}."""

    support_vectors: tuple[Vector, ...]
    rank: int

    def contains(self, u: Sequence[int]) -> bool:
        return all(_dot(u, s) > 0 for s in self.support_vectors)

    __contains__ = contains

    @property
    def inequalities(self) -> list[Vector]:
        """Distinct primitive normals s, each meaning u.s > 0."""
        return sorted({primitive(s) for s in self.support_vectors})

    def rays(self) -> list[Vector]:
        """Extreme rays of the closed cone (rank 2 only), counterclockwise."""
        if self.rank != 2:
            raise ValueError("extreme rays are only computed in rank 2")
        normals = self.inequalities
        found = set()
        for x, y in normals:
            for r in ((-y, x), (y, -x)):
                if all(_dot(r, s) >= 0 for s in normals):
                    found.add(primitive(r))
        return sorted(found, key=lambda r: float(np.arctan2(r[1], r[0])))


def cone_of_sections(m_normalized: LaurentPoly) -> ConeOfSections:
    origin = (0,) * m_normalized.rank
    if m_normalized.coeff(origin) == 0:
        raise MalformedNormalization("the normalized McMullen polynomial must contain the constant term")
    S = tuple(e for e in m_normalized.support() if e != origin)
    return ConeOfSections(S, m_normalized.rank)


def _check_class(cone: ConeOfSections, u: Sequence[int]) -> Vector:
    u = tuple(int(x) for x in u)
    if len(u) != cone.rank:
        raise ValueError(f"class {u} has length {len(u)}, expected {cone.rank}")
    if primitive(u) != u:
        raise NotPrimitive(f"class {u} is not primitive")
    if not cone.contains(u):
        raise NotInCone(f"class {u} is not in the cone of sections")
    return u


def lambda_of_class(bundle: InvariantBundle, cone: ConeOfSections, u: Sequence[int]) -> float:
    """Reciprocal of the least root modulus of specialize(m, u)."""
    u = _check_class(cone, u)
    q = specialize(bundle.mcmullen, u)
    root = roots.min_modulus_root(q, prefer_positive=True)
    if abs(root.imag) > 1e-8 or root.real <= 0:
        raise TheoryViolation(f"smallest root {root} of m^u is not positive real")
    return 1.0 / abs(root)


def delta_specialization(bundle: InvariantBundle, u: Sequence[int]) -> LaurentPoly:
    """(1 - t)^p specialize(Delta, u), p = 1 iff b >= 2."""
    q = specialize(bundle.alexander, u)
    if bundle.rank >= 2:
        q = (1 - LaurentPoly.gen("t", ("t",))) * q
    return q


def rho_of_class(bundle: InvariantBundle, cone: ConeOfSections, u: Sequence[int]) -> float:
    """max 1/|mu| over roots mu of (1 - t)^p specialize(Delta, u); 0 for a unit."""
    u = _check_class(cone, u)
    r = roots.nonzero_roots(delta_specialization(bundle, u))
    return float(1.0 / np.min(np.abs(r))) if len(r) else 0.0


def classify_class(
    orient_base: OrientabilityClass, u0: Sequence[int], u: Sequence[int], cone: ConeOfSections | None = None
) -> Orientability:
    """Orientability of the class u, from the base verdict and u mod 2."""
    if cone is not None and not cone.contains(u):
        raise NotInCone(f"class {tuple(u)} is not in the cone of sections")
    if orient_base.kind is Orientability.NEG:
        same = all((a - b) % 2 == 0 for a, b in zip(u, u0))
        return Orientability.NEG if same else Orientability.NONE
    return orient_base.kind


# ---------------------------------------------------------------------------
# Newton polytopes
# ---------------------------------------------------------------------------


def _hull_2d(points: list[Vector]) -> list[Vector]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Vector] = []
    upper: list[Vector] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def newton_vertices(points: Sequence[Sequence[int]]) -> list[Vector]:
    """Vertices of the convex hull of integer points."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        return []
    dim = len(pts[0])
    if dim == 1:
        return sorted({min(pts), max(pts)})
    if dim == 2:
        return _hull_2d(pts)
    from scipy.spatial import ConvexHull

    arr = np.array(pts, dtype=float)
    hull = ConvexHull(arr)
    return sorted(pts[i] for i in hull.vertices)


def _in_closed_cone(g: Vector, gens: Sequence[Vector]) -> bool:
    """g is a nonnegative combination of gens, by Caratheodory over subsets."""
    if not any(g):
        return True
    b = len(g)
    target = sympy.Matrix(g)
    for k in range(1, min(b, len(gens)) + 1):
        for subset in itertools.combinations(gens, k):
            B = sympy.Matrix([list(s) for s in subset]).T
            if B.rank() < k:
                continue
            try:
                sol, params = B.gauss_jordan_solve(target)
            except ValueError:
                continue
            if all(x >= 0 for x in sol):
                return True
    return False


def same_cone(gens1: Sequence[Vector], gens2: Sequence[Vector]) -> bool:
    """Closed cones spanned by two finite generator sets coincide (exact)."""
    return all(_in_closed_cone(g, gens2) for g in gens1) and all(_in_closed_cone(g, gens1) for g in gens2)


@dataclass(frozen=True)
class NewtonDualReport:
    agrees: bool
    vertex: Vector
    generators: tuple[Vector, ...]
    hull: tuple[Vector, ...]


def newton_dual_cone_check(
    delta: LaurentPoly, cone: ConeOfSections, u0: Sequence[int], orient: OrientabilityClass
) -> NewtonDualReport:
    """Compare the cone with the dual cone at the u0-maximal vertex of N(inv(Delta))."""
    if orient.kind is Orientability.NONE:
        raise NotOrientableBase("the dual-cone description needs an orientable base class")
    pts = [tuple(-x for x in e) for e in delta.support()]
    hull = newton_vertices(pts)
    best = max(_dot(u0, p) for p in hull)
    top = [p for p in hull if _dot(u0, p) == best]
    if len(top) != 1:
        raise TheoryViolation(f"u0 does not pick out a vertex of the Newton polytope: {top}")
    v = top[0]
    gens = tuple(tuple(a - b for a, b in zip(v, s)) for s in hull if s != v)
    agrees = same_cone(gens, cone.support_vectors) if gens else not cone.support_vectors
    return NewtonDualReport(agrees, v, gens, tuple(hull))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    u: Vector
    in_cone: bool
    lam: float | None
    rho: float | None
    orientability: str
    spec_m: LaurentPoly
    spec_delta: LaurentPoly


def class_report(
    bundle: InvariantBundle, cone: ConeOfSections, orient: OrientabilityClass, u0: Sequence[int], u: Sequence[int]
) -> ClassReport:
    u = tuple(int(x) for x in u)
    if primitive(u) != u:
        raise NotPrimitive(f"class {u} is not primitive")
    spec_m = specialize(bundle.mcmullen, u)
    spec_d = delta_specialization(bundle, u)
    if not cone.contains(u):
        return ClassReport(u, False, None, None, "not-applicable", spec_m, spec_d)
    return ClassReport(
        u,
        True,
        lambda_of_class(bundle, cone, u),
        rho_of_class(bundle, cone, u),
        classify_class(orient, u0, u).value,
        spec_m,
        spec_d,
    )


def sample_classes(cone: ConeOfSections, count: int, rng: np.random.Generator, bound: int = 6) -> list[Vector]:
    """Distinct primitive integral classes in the cone, drawn from a box."""
    out: list[Vector] = []
    seen = set()
    for _ in range(200 * count):
        u = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=cone.rank))
        if u in seen or not any(u) or primitive(u) != u or not cone.contains(u):
            continue
        seen.add(u)
        out.append(u)
        if len(out) == count:
            break
    return out
