"""Acceptance criteria 1 to 8.

Each test prints one ``CRITERION n: PASS|FAIL`` line with the failing clauses.
Run ``python3 tests/test_acceptance.py`` for the summary alone.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import pipeline  # noqa: E402
from freebycyclic.cones import (  # noqa: E402
    classify_class,
    cone_of_sections,
    lambda_of_class,
    rho_of_class,
)
from freebycyclic.dsl import FIXTURES, load_fixture  # noqa: E402
from freebycyclic.graph_core import (  # noqa: E402
    char_poly,
    geometric_stretch,
    homological_stretch,
    homology_action,
    transition_matrix,
)
from freebycyclic.invariants import (  # noqa: E402
    compute_invariants,
    verify_relations,
    verify_specializations,
)
from freebycyclic.laurent import LaurentPoly, equivalent  # noqa: E402
from freebycyclic.oracle import run_oracles  # noqa: E402
from freebycyclic.orientation import Orientability, classify_orientability, verify_theorem_A  # noqa: E402
from freebycyclic.torus import (  # noqa: E402
    change_coordinates,
    compute_presentation,
    coordinate_change,
    lifted_matrices,
    vertex_cycle_product,
)

TRIVIAL = ("identity_circle", "doubling", "reversal", "swap_rose")


def near(x, target, tol):
    return abs(x - target) <= tol


class Clauses:
    """Named boolean clauses of one criterion."""

    def __init__(self):
        self.items = []

    def check(self, name, ok):
        self.items.append((name, bool(ok)))

    @property
    def passed(self):
        return all(ok for _, ok in self.items)

    def line(self, n):
        failed = [name for name, ok in self.items if not ok]
        verdict = "PASS" if not failed else "FAIL"
        tail = f" ({len(self.items)} clauses)" if not failed else f" failed: {'; '.join(failed)}"
        return f"CRITERION {n}: {verdict}{tail}"


def criterion_1():
    c = Clauses()
    f = load_fixture("o_and_none")
    c.check("o_and_none pos", classify_orientability(f).kind is Orientability.POS)
    t = LaurentPoly.gen("t", ("t",))
    c.check("char_poly(A)", char_poly(transition_matrix(f)) == t**4 - 6 * t**3 + 7 * t**2 - 3 * t + 1)
    c.check("lambda 4.61", near(geometric_stretch(f), 4.61, 0.01))
    c.check("rho 4.61", near(homological_stretch(f), 4.61, 0.01))
    g = load_fixture("o_and_none_inverse")
    c.check("inverse non-orientable", classify_orientability(g).kind is Orientability.NONE)
    c.check("inverse lambda 3.08", near(geometric_stretch(g), 3.08, 0.01))
    c.check("inverse rho 2.15", near(homological_stretch(g), 2.15, 0.01))
    return c


def criterion_2():
    c = Clauses()
    t = LaurentPoly.gen("t", ("t",))
    expected = {
        "anti_anti": (2.17, -1 + 3 * t + t**2 - t**3),
        "anti_anti_inverse": (3.72, -1 + 3 * t + 3 * t**2 - t**3),
    }
    for name, (lam, poly) in expected.items():
        f = load_fixture(name)
        c.check(f"{name} neg", classify_orientability(f).kind is Orientability.NEG)
        c.check(f"{name} lambda {lam}", near(geometric_stretch(f), lam, 0.01))
        flipped = LaurentPoly({e: (-1) ** e[0] * k for e, k in poly.items()}, ("t",))
        got = char_poly(homology_action(f))
        c.check(f"{name} char_poly(f_*)", got == flipped or got == -flipped)
    return c


def criterion_3():
    c = Clauses()
    pres, lifted, bundle = pipeline("antiO")
    c.check("b = 2", pres.rank == 2)
    cls = {
        "aF": pres.path_class([("a", 1), ("f", -1)]),
        "bf": pres.path_class([("b", 1), ("f", 1)]),
        "cF": pres.path_class([("c", 1), ("f", -1)]),
        "dF": pres.path_class([("d", 1), ("f", -1)]),
        "ef": pres.path_class([("e", 1), ("f", 1)]),
    }
    c.check("[aF] != 0", any(cls["aF"]))
    c.check("[aF] = [bf]", cls["aF"] == cls["bf"])
    c.check("[aF] = [cF]", cls["aF"] == cls["cF"])
    c.check("[dF] = [ef] = 0", not any(cls["dF"]) and not any(cls["ef"]))
    a, z = (LaurentPoly.gen(v, pres.variables) for v in ("a", "z"))
    zero, one = 0 * a, 0 * a + 1
    c.check("Plift", lifted.Plift == [[zero, a], [one, zero]])
    M = [
        [-1, 0, -1, -1, -1, 0],
        [-a, 0, -a, -a, -2 * a, 0],
        [0, 0, 0, -1, 0, -1],
        [-a, -1, 0, -1, 0, -1],
        [-a, -2, 0, -1, 0, -1],
        [-a, 0, -a, 0, 0, 0],
    ]
    M = [[x if isinstance(x, LaurentPoly) else x * one for x in row] for row in M]
    c.check("Mlift", lifted.Mlift == M)
    c.check("Delta", equivalent(bundle.alexander, z**4 + 2 * z**3 + (1 - 7 * a) * z**2 + 2 * a * z + a**2))
    m = z**6 - 2 * z**5 + (1 - 8 * a) * z**4 + (8 * a**2 - a) * z**2 + 2 * a**2 * z - a**3
    c.check("m", equivalent(bundle.mcmullen, m))
    cone = cone_of_sections(bundle.mcmullen_normalized)
    c.check("rays", sorted(cone.rays()) == [(-2, -1), (1, 0)])
    u0 = pres.dual_class
    c.check("lambda(u0)", near(lambda_of_class(bundle, cone, u0), 3.732, 0.01))
    c.check("rho(u0)", near(rho_of_class(bundle, cone, u0), 3.732, 0.01))
    c.check("lambda(2,-3)", near(lambda_of_class(bundle, cone, (2, -3)), 1.43092, 1e-4))
    c.check("rho(2,-3)", near(rho_of_class(bundle, cone, (2, -3)), 1.43092, 1e-4))
    orient = classify_orientability(load_fixture("antiO"))
    c.check("classify (2,-3) neg", classify_class(orient, u0, (2, -3), cone) is Orientability.NEG)
    c.check("classify (1,-1) none", classify_class(orient, u0, (1, -1), cone) is Orientability.NONE)
    return c


def criterion_4():
    c = Clauses()
    for name in FIXTURES:
        pres, _, bundle = pipeline(name)
        rep = verify_relations(bundle, pres, classify_orientability(load_fixture(name)))
        c.check(f"{name} mod 2", rep.mod2)
        if rep.pos is not None:
            c.check(f"{name} pos", rep.pos)
        if rep.neg is not None:
            c.check(f"{name} neg", rep.neg)
    return c


def criterion_5():
    c = Clauses()
    for name in FIXTURES:
        pres, _, bundle = pipeline(name)
        rep = verify_specializations(load_fixture(name), pres, bundle)
        c.check(f"{name} m(u0)", rep.mcmullen_ok)
        c.check(f"{name} Delta(u0)", rep.alexander_ok)
    return c


def criterion_6():
    c = Clauses()
    for name in FIXTURES:
        pres, lifted, _ = pipeline(name)
        reports = [r for r in run_oracles(load_fixture(name), pres, lifted) if r.name != "iterate_growth"]
        c.check(f"{name} multicycle ran", any(r.name == "multicycle_expansion" for r in reports))
        for r in reports:
            c.check(f"{name} {r.name}", r.passed)
    return c


def criterion_7():
    c = Clauses()
    for name in FIXTURES:
        rep = verify_theorem_A(load_fixture(name))
        c.check(f"{name} identities", rep.passed)
        if rep.kind is Orientability.NONE:
            c.check(f"{name} gap > 0.5", rep.gap > 0.5)
    c.check("trivial maps present", set(TRIVIAL) <= set(FIXTURES))
    return c


def criterion_8():
    c = Clauses()
    f = load_fixture("antiO")
    reference = compute_presentation(f, "v", ["f"])
    ref = compute_invariants(reference, lifted_matrices(reference))
    ref_cone = cone_of_sections(ref.mcmullen_normalized)
    for base, tree in ((None, None), ("v", ["d"]), ("w", ["d"]), ("w", ["b"])):
        pres = compute_presentation(f, base, tree)
        inv = compute_invariants(pres, lifted_matrices(pres))
        T = coordinate_change(pres, reference)
        label = f"{pres.basepoint}/{''.join(sorted(pres.spanning_tree))}"
        moved = {k: change_coordinates(getattr(inv, k), T) for k in ("alexander", "mcmullen", "mcmullen_normalized")}
        c.check(f"{label} Delta", equivalent(moved["alexander"], ref.alexander))
        c.check(f"{label} m", equivalent(moved["mcmullen"], ref.mcmullen))
        c.check(f"{label} p", equivalent(change_coordinates(vertex_cycle_product(pres), T), ref.vertex_poly))
        c.check(f"{label} m'", moved["mcmullen_normalized"] == ref.mcmullen_normalized)
        cone = cone_of_sections(moved["mcmullen_normalized"])
        c.check(f"{label} cone", cone.inequalities == ref_cone.inequalities and cone.rays() == ref_cone.rays())
    return c


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    result = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + result.line(n))
    assert result.passed, result.line(n)


if __name__ == "__main__":
    for i, crit in enumerate(CRITERIA, 1):
        print(crit().line(i))
