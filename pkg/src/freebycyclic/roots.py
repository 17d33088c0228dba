"""Roots of exact univariate integer (Laurent) polynomials.

Perron roots come from exact real-root isolation (sympy) refined to a tight
rational bracket.  Complex roots start from companion-matrix eigenvalues, are
refined by Aberth iteration, and get a Newton polish in extended precision
against the integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
import sympy

from .errors import AmbiguousRoot
from .laurent import LaurentPoly

SEPARATION_GUARD = 1e-10
_t = sympy.Symbol("t")


def integer_coefficients(p: LaurentPoly) -> list[int]:
    """Ascending coefficients of ``p`` divided by its lowest power of t."""
    _, coeffs = p.coefficients()
    return coeffs


def squarefree_part(coeffs: list[int]) -> list[int]:
    """Ascending coefficients of the square-free part over Q, made primitive."""
    if len(coeffs) <= 2:
        return list(coeffs)
    poly = sympy.Poly(list(reversed(coeffs)), _t, domain="ZZ")
    sq = poly.sqf_part()
    return [int(c) for c in reversed(sq.all_coeffs())]


def largest_real_root(p: LaurentPoly, lower: float | None = None, upper: float | None = None, eps: float = 1e-13) -> float:
    """Largest real root of ``p``, by exact isolation.

    ``lower``/``upper`` are optional a-priori bounds; isolation intervals
    outside them are ignored.  Returns 0.0 if ``p`` has no real root other than 0.
    """
    coeffs = squarefree_part(integer_coefficients(p))
    if len(coeffs) < 2:
        return 0.0
    poly = sympy.Poly(list(reversed(coeffs)), _t, domain="ZZ")
    best = None
    for (a, b), _ in poly.intervals(eps=Fraction(eps).limit_denominator(10**15)):
        lo, hi = Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))
        if upper is not None and lo > upper:
            continue
        if lower is not None and hi < lower:
            continue
        if best is None or hi > best[1]:
            best = (lo, hi)
    if best is None:
        return 0.0
    return float((best[0] + best[1]) / 2)


def _aberth(desc: np.ndarray, z: np.ndarray, tol: float = 1e-12, maxiter: int = 500) -> np.ndarray:
    dp = np.polyder(desc)
    n = len(z)
    for _ in range(maxiter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(dp, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            offset = ratio / (1.0 - ratio * inv.sum(axis=1))
        offset = np.where(np.isfinite(offset), offset, 0.0)
        z = z - offset
        if n == 0 or np.max(np.abs(offset) / np.maximum(1.0, np.abs(z))) < tol:
            break
    return z


def _polish(desc_int: list[int], z: complex, steps: int = 8) -> complex:
    with mpmath.workdps(60):
        x = mpmath.mpc(z.real, z.imag)
        d = [c * (len(desc_int) - 1 - i) for i, c in enumerate(desc_int[:-1])]
        for _ in range(steps):
            fx = mpmath.polyval(desc_int, x)
            dfx = mpmath.polyval(d, x)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= mpmath.mpf(10) ** -40 * max(1, abs(x)):
                break
        return complex(x)


def nonzero_roots(p: LaurentPoly) -> np.ndarray:
    """Distinct nonzero complex roots of ``p``."""
    coeffs = squarefree_part(integer_coefficients(p))
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) < 2:
        return np.zeros(0, dtype=complex)
    desc_int = list(reversed(coeffs))
    desc = np.array(desc_int, dtype=float)
    start = np.roots(desc).astype(complex)
    refined = _aberth(desc, start)
    return np.array([_polish(desc_int, complex(z)) for z in refined])


def max_modulus(p: LaurentPoly) -> float:
    """Largest modulus of a nonzero root (0.0 when there is none)."""
    r = nonzero_roots(p)
    return float(np.max(np.abs(r))) if len(r) else 0.0


def _same_or_conjugate(a: complex, b: complex, tol: float = 1e-8) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a)) or abs(a - np.conj(b)) <= tol * max(1.0, abs(a))


def min_modulus_root(p: LaurentPoly, guard: float = SEPARATION_GUARD, prefer_positive: bool = False) -> complex:
    """The nonzero root of least modulus.

    Raises AmbiguousRoot if a root other than it (or its conjugate) has modulus
    within ``guard`` of the minimum.  With ``prefer_positive`` a tie is
    resolved in favour of a positive real root when one attains the minimum.
    """
    r = nonzero_roots(p)
    if not len(r):
        raise ValueError(f"{p} has no nonzero roots")
    order = np.argsort(np.abs(r))
    best = r[order[0]]
    tied = [r[i] for i in order if abs(abs(r[i]) - abs(best)) <= guard]
    if prefer_positive:
        positive = [x for x in tied if abs(x.imag) <= 1e-8 and x.real > 0]
        if positive:
            return complex(positive[0])
    for x in tied[1:]:
        if not _same_or_conjugate(x, best):
            raise AmbiguousRoot(f"roots {best} and {x} tie in modulus")
    return complex(best)
