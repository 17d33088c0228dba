"""Alexander, McMullen and vertex polynomials of a free-by-cyclic group.

All three live in Z[H] with the variable order of the torus presentation
(K-generators, then z).  They are defined up to units; ``alexander``,
``mcmullen`` and ``vertex_poly`` are stored in unit normal form, while
``mcmullen_normalized`` is the exact polynomial z^{-|E|} det(zI - A~).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NonexactDivision, TheoryViolation
from .graph_core import GraphMap, char_poly, homology_action, transition_matrix
from .laurent import (
    LaurentPoly,
    apply_inv,
    apply_involution,
    equivalent,
    mod2_equivalent,
    monic_div_in_z,
    specialize,
    unit_normal_form,
)
from .lattice import lattice_index
from .orientation import Orientability, OrientabilityClass
from .torus import (
    LiftedMatrices,
    TorusPresentation,
    char_det,
    compute_presentation,
    lifted_matrices,
    vertex_cycle_product,
)


def r_factor(pres: TorusPresentation) -> LaurentPoly:
    """1 when b >= 2, z - 1 when b = 1."""
    one = LaurentPoly.constant(1, pres.variables)
    return one if pres.rank >= 2 else pres.z - 1


def alexander_polynomial(pres: TorusPresentation, lifted: LiftedMatrices) -> LaurentPoly:
    """det(zI - M~) r / det(zI - P~), in unit normal form.

    The factor r is applied before dividing: in rank one the denominator
    need not divide det(zI - M~) on its own.
    """
    num = char_det(pres, lifted.Mlift) * r_factor(pres)
    den = char_det(pres, lifted.Plift)
    try:
        return unit_normal_form(monic_div_in_z(num, den))
    except NonexactDivision as err:
        raise NonexactDivision(f"det(zI - P~) does not divide det(zI - M~) r: {err}") from None


def mcmullen_polynomial(pres: TorusPresentation, lifted: LiftedMatrices) -> tuple[LaurentPoly, LaurentPoly]:
    """``(m, m')``: det(zI - A~) in unit normal form and z^{-|E|} det(zI - A~)."""
    det = char_det(pres, lifted.Alift)
    n = len(lifted.edges)
    normalized = det.shift((0,) * pres.k_rank + (-n,))
    return unit_normal_form(det), normalized


def vertex_polynomial(pres: TorusPresentation, lifted: LiftedMatrices | None = None) -> LaurentPoly:
    """prod (1 - c_i) over vertex cycles, checked against det(zI - P~)."""
    p = vertex_cycle_product(pres)
    if lifted is not None and not equivalent(p, char_det(pres, lifted.Plift)):
        raise TheoryViolation("vertex-cycle product disagrees with det(zI - P~)")
    return unit_normal_form(p)


@dataclass(frozen=True)
class OrientationClass:
    """A class in H^1(H; Z/2), stored as parities on the coordinate basis."""

    parity: tuple[int, ...]

    def sign(self, h: Sequence[int]) -> int:
        return -1 if sum(a * b for a, b in zip(self.parity, h)) % 2 else 1


def orientation_class(pres: TorusPresentation, orient: OrientabilityClass) -> OrientationClass | None:
    """u0 mod 2 for a negatively orientable base map, 0 for a positive one."""
    if orient.kind is Orientability.NEG:
        return OrientationClass(tuple(x % 2 for x in pres.dual_class))
    if orient.kind is Orientability.POS:
        return OrientationClass((0,) * pres.rank)
    return None


@dataclass(frozen=True)
class InvariantBundle:
    variables: tuple[str, ...]
    alexander: LaurentPoly
    mcmullen: LaurentPoly
    mcmullen_normalized: LaurentPoly
    vertex_poly: LaurentPoly
    rank: int
    r_factor: LaurentPoly

    @property
    def mcmullen_hat(self) -> LaurentPoly:
        return self.mcmullen * self.r_factor

    @property
    def symmetric(self) -> bool:
        """Whether Delta agrees with its image under h -> h^{-1} up to a unit."""
        return equivalent(self.alexander, apply_inv(self.alexander))

    def support_generates(self) -> bool:
        """supp(m') spans H as an abelian group."""
        return lattice_index(self.mcmullen_normalized.support(), self.rank) == 1


def compute_invariants(pres: TorusPresentation, lifted: LiftedMatrices | None = None) -> InvariantBundle:
    lifted = lifted_matrices(pres) if lifted is None else lifted
    m, m_norm = mcmullen_polynomial(pres, lifted)
    return InvariantBundle(
        variables=pres.variables,
        alexander=alexander_polynomial(pres, lifted),
        mcmullen=m,
        mcmullen_normalized=m_norm,
        vertex_poly=vertex_polynomial(pres, lifted),
        rank=pres.rank,
        r_factor=r_factor(pres),
    )


def invariants_of(f: GraphMap, basepoint: str | None = None, tree=None):
    """Presentation, lifted matrices and invariant bundle of ``f`` in one call."""
    pres = compute_presentation(f, basepoint, tree)
    lifted = lifted_matrices(pres)
    return pres, lifted, compute_invariants(pres, lifted)


@dataclass
class RelationReport:
    """Outcome of the exact relations between m, Delta and p.

    ``pos`` and ``neg`` are None when the relation does not apply.  Witnesses
    hold the two sides in unit normal form for every failed check.
    """

    pos: bool | None
    neg: bool | None
    mod2: bool
    witnesses: dict[str, tuple[str, str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.mod2 and self.pos is not False and self.neg is not False


def verify_relations(
    bundle: InvariantBundle, pres: TorusPresentation, orient: OrientabilityClass
) -> RelationReport:
    """Check m^ = Delta p (pos), iota(m) r = Delta p (neg) and m^ = Delta p mod 2.

    Here m^ = m r.  The involution is applied to m before multiplying by r:
    in rank one r = z - 1 is not fixed by iota.
    """
    rhs = bundle.alexander * bundle.vertex_poly
    mhat = bundle.mcmullen_hat
    report = RelationReport(pos=None, neg=None, mod2=mod2_equivalent(mhat, rhs))
    if not report.mod2:
        report.witnesses["mod2"] = (str(mhat), str(rhs))
    eps = orientation_class(pres, orient)
    if orient.kind is Orientability.POS:
        report.pos = equivalent(mhat, rhs)
        if not report.pos:
            report.witnesses["pos"] = (str(unit_normal_form(mhat)), str(unit_normal_form(rhs)))
    elif orient.kind is Orientability.NEG:
        lhs = apply_involution(bundle.mcmullen, eps.parity) * bundle.r_factor
        report.neg = equivalent(lhs, rhs)
        if not report.neg:
            report.witnesses["neg"] = (str(unit_normal_form(lhs)), str(unit_normal_form(rhs)))
    return report


@dataclass(frozen=True)
class SpecializationReport:
    mcmullen_ok: bool
    alexander_ok: bool
    spec_m: LaurentPoly
    reciprocal_A: LaurentPoly
    spec_delta: LaurentPoly
    reciprocal_fstar: LaurentPoly


def verify_specializations(f: GraphMap, pres: TorusPresentation, bundle: InvariantBundle) -> SpecializationReport:
    """Exact checks of the specializations at u0.

    specialize(m, u0) ~ det(t^{-1} I - A) and
    (1 - t)^p specialize(Delta, u0) ~ det(t^{-1} I - f_*), p = 1 iff b >= 2.
    """
    u0 = pres.dual_class
    spec_m = specialize(bundle.mcmullen, u0)
    recip_A = apply_inv(char_poly(transition_matrix(f)))
    t = LaurentPoly.gen("t", ("t",))
    spec_d = specialize(bundle.alexander, u0)
    if bundle.rank >= 2:
        spec_d = (1 - t) * spec_d
    recip_f = apply_inv(char_poly(homology_action(f)))
    return SpecializationReport(
        mcmullen_ok=equivalent(spec_m, recip_A),
        alexander_ok=equivalent(spec_d, recip_f),
        spec_m=spec_m,
        reciprocal_A=recip_A,
        spec_delta=spec_d,
        reciprocal_fstar=recip_f,
    )
