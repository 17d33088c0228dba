"""Exact multivariate Laurent polynomials over the integers.

Elements of the group ring Z[H] for H free abelian of rank b.  A polynomial is
a finite map from integer exponent vectors to nonzero Python ints, so all
arithmetic is exact.  The variable-name tuple travels with every polynomial;
binary operations require identical variable tuples.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import NonexactDivision, ZeroPolynomial

Exponent = tuple[int, ...]


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """An immutable element of Z[x_1^{+-1}, ..., x_b^{+-1}].

    Parameters
    ----------
    terms : mapping exponent tuple -> int
        Zero coefficients are dropped.
    variables : sequence of str
        Variable names; the length fixes the rank.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]], variables: Sequence[str]):
        self.variables = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        n = len(self.variables)
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            acc[exp] = acc.get(exp, 0) + int(coeff)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: Sequence[str]) -> LaurentPoly:
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def zero(cls, variables: Sequence[str]) -> LaurentPoly:
        return cls({}, variables)

    @classmethod
    def monomial(cls, exp: Sequence[int], variables: Sequence[str], coeff: int = 1) -> LaurentPoly:
        return cls({tuple(exp): coeff}, variables)

    @classmethod
    def gen(cls, name: str, variables: Sequence[str]) -> LaurentPoly:
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls({tuple(exp): 1}, variables)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], var: str = "t", low: int = 0) -> LaurentPoly:
        """Univariate polynomial from ascending coefficients starting at ``var**low``."""
        return cls({(low + i,): c for i, c in enumerate(coeffs)}, (var,))

    # -- basic accessors ----------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    @property
    def rank(self) -> int:
        return len(self.variables)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Exponent]:
        return list(self._terms)

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def lead(self) -> tuple[Exponent, int]:
        """Lexicographically largest term."""
        exp = max(self._terms)
        return exp, self._terms[exp]

    def min_corner(self) -> Exponent:
        """Componentwise minimum of the support."""
        return tuple(min(col) for col in zip(*self._terms)) if self._terms else (0,) * self.rank

    def max_corner(self) -> Exponent:
        return tuple(max(col) for col in zip(*self._terms)) if self._terms else (0,) * self.rank

    def degree(self, i: int = -1) -> int:
        return max(e[i] for e in self._terms)

    def low_degree(self, i: int = -1) -> int:
        return min(e[i] for e in self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("negative powers only for units")
            return LaurentPoly({tuple(n * x for x in e): c ** (-n)}, self.variables)
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent ``exp``."""
        exp = tuple(exp)
        return LaurentPoly({_add_exp(e, exp): c for e, c in self._terms.items()}, self.variables)

    def scale(self, c: int) -> LaurentPoly:
        return LaurentPoly({e: c * v for e, v in self._terms.items()}, self.variables)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient ``self / other`` in Z[H].

        Leading-term division in lex order.  Every quotient exponent must lie in
        the box fixed by the per-variable degree ranges of the operands, which
        bounds the loop; leaving the box means the division is not exact.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        lo = _sub_exp(self.min_corner(), other.min_corner())
        hi = _sub_exp(self.max_corner(), other.max_corner())
        lead_e, lead_c = other.lead()
        rem = dict(self._terms)
        quot: dict[Exponent, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = _sub_exp(e, lead_e)
            if c % lead_c or any(q < a or q > b for q, a, b in zip(qe, lo, hi)):
                raise NonexactDivision(f"{self} is not divisible by {other}")
            qc = c // lead_c
            quot[qe] = qc
            for oe, oc in other._terms.items():
                te = _add_exp(qe, oe)
                v = rem.get(te, 0) - qc * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return LaurentPoly(quot, self.variables)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, tuple(self._terms.items())))
        return self._hash

    # -- maps ---------------------------------------------------------------

    def map_exponents(self, fn, variables: Sequence[str] | None = None) -> LaurentPoly:
        variables = self.variables if variables is None else variables
        return LaurentPoly([(fn(e), c) for e, c in self._terms.items()], variables)

    def set_to_one(self, indices: Iterable[int]) -> LaurentPoly:
        """Substitute 1 for the listed variables and drop them."""
        drop = set(indices)
        keep = [i for i in range(self.rank) if i not in drop]
        names = [self.variables[i] for i in keep]
        return self.map_exponents(lambda e: tuple(e[i] for i in keep), names)

    def with_variables(self, variables: Sequence[str]) -> LaurentPoly:
        """Same terms, renamed variables."""
        if len(variables) != self.rank:
            raise ValueError("rank mismatch")
        return LaurentPoly(self._terms, variables)

    def embed(self, variables: Sequence[str], positions: Sequence[int]) -> LaurentPoly:
        """Place this polynomial's variables at ``positions`` of a larger ring."""
        n = len(variables)

        def place(e):
            out = [0] * n
            for x, p in zip(e, positions):
                out[p] = x
            return tuple(out)

        return self.map_exponents(place, variables)

    def __call__(self, *values):
        """Evaluate at numbers (ints, floats, complex, mpmath values)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                term = term * v ** k
            total = total + term
        return total

    # -- univariate helpers -------------------------------------------------

    def coefficients(self) -> tuple[int, list[int]]:
        """For a univariate polynomial: ``(low, coeffs)`` ascending from ``t**low``."""
        if self.rank != 1:
            raise ValueError("coefficients() needs a univariate polynomial")
        if not self._terms:
            return 0, []
        low = self.low_degree(0)
        high = self.degree(0)
        return low, [self._terms.get((k,), 0) for k in range(low, high + 1)]

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render(self)


def _monomial_str(exp: Sequence[int], names: Sequence[str]) -> str:
    compact = all(len(n) == 1 for n in names)
    parts = []
    for n, k in zip(names, exp):
        if k == 0:
            continue
        parts.append(n if k == 1 else f"{n}^{k}" if k > 0 else f"{n}^({k})")
    return ("" if compact else "*").join(parts)


def _flat_terms(p: LaurentPoly, names: Sequence[str], spaced: bool) -> str:
    out = []
    for e, c in sorted(p.items(), key=lambda t: (sum(t[0]), t[0])):
        mono = _monomial_str(e, names)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if mono else str(mag))
        out.append(("-" if c < 0 else "+", body))
    if not out:
        return "0"
    sep = (lambda s: f" {s} ") if spaced else (lambda s: s)
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += sep(sign) + body
    return text


def render(p: LaurentPoly) -> str:
    """Human-readable form, grouped by powers of the last variable.

    ``z^4 + 2z^3 + (1-7a)z^2 + 2az + a^2``
    """
    if p.is_zero():
        return "0"
    if p.rank == 0:
        return str(p.coeff(()))
    if p.rank == 1:
        return _flat_terms(p, p.variables, spaced=True)
    zname = p.variables[-1]
    inner = p.variables[:-1]
    groups: dict[int, dict[Exponent, int]] = {}
    for e, c in p.items():
        groups.setdefault(e[-1], {})[e[:-1]] = c
    pieces = []
    for k in sorted(groups, reverse=True):
        coeff = LaurentPoly(groups[k], inner)
        zmono = "" if k == 0 else (zname if k == 1 else f"{zname}^{k}" if k > 0 else f"{zname}^({k})")
        if zmono and len(coeff) == 1:
            (e, c), = coeff.items()
            cm = _monomial_str(e, inner)
            glue = "" if all(len(n) == 1 for n in p.variables) or not cm else "*"
            mag = abs(c)
            body = (cm + glue if cm else "") + zmono
            if mag != 1:
                body = f"{mag}{body}"
            pieces.append(("-" if c < 0 else "+", body))
        elif zmono:
            pieces.append(("+", f"({_flat_terms(coeff, inner, spaced=False)}){zmono}"))
        else:
            text = _flat_terms(coeff, inner, spaced=True)
            if len(coeff) == 1 and text.startswith("-"):
                pieces.append(("-", text[1:]))
            else:
                pieces.append(("+", text if len(coeff) == 1 else f"({_flat_terms(coeff, inner, spaced=False)})"))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# Operations on Z[H]
# ---------------------------------------------------------------------------


def unit_normal_form(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of the class of ``p`` up to units +-h.

    Translates the componentwise minimum of the support to the origin and makes
    the coefficient at the lex-smallest exponent positive.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no unit normal form")
    q = p.shift(tuple(-x for x in p.min_corner()))
    first = min(q.support())
    return q if q.coeff(first) > 0 else -q


def equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    """``p`` and ``q`` agree up to multiplication by a unit +-h."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return unit_normal_form(p) == unit_normal_form(q)


def unit_between(p: LaurentPoly, q: LaurentPoly) -> tuple[int, Exponent] | None:
    """Return ``(sign, h)`` with ``q == sign * h * p``, or None."""
    if p.is_zero() or q.is_zero() or len(p) != len(q):
        return None
    h = _sub_exp(q.min_corner(), p.min_corner())
    shifted = p.shift(h)
    if shifted == q:
        return 1, h
    if -shifted == q:
        return -1, h
    return None


def mod2(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({e: c % 2 for e, c in p.items()}, p.variables)


def mod2_equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Equality in Z/2[H] up to a monomial."""
    p2, q2 = mod2(p), mod2(q)
    if p2.is_zero() or q2.is_zero():
        return p2.is_zero() and q2.is_zero()
    return p2.shift([-x for x in p2.min_corner()]) == q2.shift([-x for x in q2.min_corner()])


def apply_involution(p: LaurentPoly, eps: Sequence[int]) -> LaurentPoly:
    """Ring involution h -> (-1)^{eps(h)} h."""
    eps = tuple(eps)
    return LaurentPoly(
        {e: (-c if sum(a * b for a, b in zip(eps, e)) % 2 else c) for e, c in p.items()}, p.variables
    )


def apply_inv(p: LaurentPoly) -> LaurentPoly:
    """Ring automorphism h -> h^{-1}."""
    return p.map_exponents(lambda e: tuple(-x for x in e))


def specialize(p: LaurentPoly, u: Sequence[int], var: str = "t") -> LaurentPoly:
    """Image of ``p`` under Z[H] -> Z[t^{+-1}], h -> t^{u(h)}."""
    u = tuple(u)
    if len(u) != p.rank:
        raise ValueError(f"class {u} has wrong length for rank {p.rank}")
    return LaurentPoly([((sum(a * b for a, b in zip(u, e)),), c) for e, c in p.items()], (var,))


def content(p: LaurentPoly) -> int:
    g = 0
    for c in p._terms.values():
        g = gcd(g, c)
    return g


# ---------------------------------------------------------------------------
# Determinants and division
# ---------------------------------------------------------------------------

Matrix = list[list[LaurentPoly]]


def _check_square(M: Sequence[Sequence[LaurentPoly]]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    return n


def cofactor_det(M: Sequence[Sequence[LaurentPoly]], variables: Sequence[str] | None = None) -> LaurentPoly:
    """Laplace expansion along the first row.  Exponential; for small matrices."""
    n = _check_square(M)
    if n == 0:
        if variables is None:
            raise ValueError("empty matrix needs explicit variables")
        return LaurentPoly.constant(1, variables)
    if n == 1:
        return M[0][0]
    total = LaurentPoly.zero(M[0][0].variables)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total = total - term if j % 2 else total + term
    return total


def bareiss_det(M: Sequence[Sequence[LaurentPoly]], variables: Sequence[str] | None = None) -> LaurentPoly:
    """Fraction-free Gaussian elimination; every division is exact in Z[H]."""
    n = _check_square(M)
    if n == 0:
        if variables is None:
            raise ValueError("empty matrix needs explicit variables")
        return LaurentPoly.constant(1, variables)
    A = [list(row) for row in M]
    names = A[0][0].variables
    sign = 1
    prev = LaurentPoly.constant(1, names)
    for k in range(n - 1):
        # sparsest nonzero pivot keeps intermediate expressions small
        candidates = [i for i in range(k, n) if not A[i][k].is_zero()]
        if not candidates:
            return LaurentPoly.zero(names)
        p = min(candidates, key=lambda i: (len(A[i][k]), i))
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * pivot - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev)
            A[i][k] = LaurentPoly.zero(names)
        prev = pivot
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def laurent_det(M: Sequence[Sequence[LaurentPoly]], variables: Sequence[str] | None = None) -> LaurentPoly:
    """Exact determinant of a square matrix over Z[H]."""
    n = _check_square(M)
    if n <= 2:
        return cofactor_det(M, variables)
    return bareiss_det(M, variables)


def char_matrix(M: Sequence[Sequence[LaurentPoly]], z: LaurentPoly) -> Matrix:
    """``z I - M``."""
    n = _check_square(M)
    return [[(z if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)]


def monic_div_in_z(num: LaurentPoly, den: LaurentPoly, index: int = -1) -> LaurentPoly:
    """Exact quotient ``num / den`` by long division in one variable.

    ``den``, viewed as a polynomial in the variable at ``index`` with
    coefficients in the Laurent ring of the others, must have a unit leading
    coefficient.  Raises NonexactDivision on a nonzero remainder.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    names = num.variables
    if den.variables != names:
        raise ValueError("variable mismatch")
    if num.is_zero():
        return num
    idx = index % len(names)

    def split(p):
        out: dict[int, dict[Exponent, int]] = {}
        for e, c in p.items():
            out.setdefault(e[idx], {})[e] = c
        return {k: LaurentPoly(v, names) for k, v in out.items()}

    dparts = split(den)
    dtop = max(dparts)
    lead = dparts[dtop]
    if not lead.is_unit():
        raise ValueError(f"divisor is not monic in {names[idx]}: leading coefficient {lead}")
    lead_inv = lead ** -1
    dlow = min(dparts)
    rem = num
    quot = LaurentPoly.zero(names)
    # quotient degrees in z range over [low(num) - low(den), deg(num) - deg(den)]
    qlow = num.low_degree(idx) - dlow
    while not rem.is_zero():
        rtop = rem.degree(idx)
        shift = rtop - dtop
        if shift < qlow:
            raise NonexactDivision(f"{num} is not divisible by {den}")
        # lead_inv carries z^{-dtop}, so step already sits at z^shift
        step = split(rem)[rtop] * lead_inv
        quot = quot + step
        rem = rem - step * den
    return quot
