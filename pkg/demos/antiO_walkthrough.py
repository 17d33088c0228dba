"""From a graph map to the cone of sections, on a rank-two example.

The map acts on a two-vertex graph with six edges.  Its mapping torus has
first Betti number two, so every invariant is a Laurent polynomial in the
fiber generator ``a`` and the flow generator ``z``.  The script prints the
splitting, the lifted matrices, the three polynomials, the cone and the
stretch factors of a few classes inside it.

Run with ``python3 demos/antiO_walkthrough.py``.
"""

from freebycyclic.cones import class_report, cone_of_sections, newton_dual_cone_check
from freebycyclic.dsl import load_fixture_document
from freebycyclic.invariants import invariants_of, verify_relations
from freebycyclic.orientation import classify_orientability


def show_matrix(label, rows, names):
    print(label)
    width = max(len(str(x)) for row in rows for x in row)
    for name, row in zip(names, rows):
        print(f"  {name}  " + "  ".join(f"{str(x):>{width}}" for x in row))


def main():
    doc = load_fixture_document("antiO")
    f = doc.graph_map
    pres, lifted, bundle = invariants_of(f, doc.basepoint, doc.tree)
    orient = classify_orientability(f)

    print(f"b = {pres.rank}, variables {', '.join(pres.variables)}")
    print(f"spanning tree {sorted(pres.spanning_tree)} at {pres.basepoint}")
    print("cocycle:", {e: v[0] for e, v in pres.cocycle.items()})
    print()
    show_matrix("lifted signed chain matrix", lifted.Mlift, lifted.edges)
    show_matrix("lifted vertex matrix", lifted.Plift, lifted.vertices)
    print()
    print("Alexander  ", bundle.alexander)
    print("McMullen   ", bundle.mcmullen)
    print("vertex     ", bundle.vertex_poly)
    rel = verify_relations(bundle, pres, orient)
    print(f"orientability {orient.kind.value}: twisted relation holds = {rel.neg}, mod 2 = {rel.mod2}")
    print()

    cone = cone_of_sections(bundle.mcmullen_normalized)
    print("cone inequalities u.s > 0 for s in", cone.inequalities)
    print("extreme rays", cone.rays())
    newton = newton_dual_cone_check(bundle.alexander, cone, pres.dual_class, orient)
    print(f"dual cone of the Newton polytope at {newton.vertex} agrees: {newton.agrees}")
    print()
    print(f"{'class':10} {'lambda':>9} {'rho':>9}  orientability")
    for u in (pres.dual_class, (2, -3), (1, -1), (1, -2), (3, -4), (0, 1)):
        rep = class_report(bundle, cone, orient, pres.dual_class, u)
        lam = f"{rep.lam:9.5f}" if rep.lam is not None else f"{'-':>9}"
        rho = f"{rep.rho:9.5f}" if rep.rho is not None else f"{'-':>9}"
        print(f"{str(rep.u):10} {lam} {rho}  {rep.orientability}")


if __name__ == "__main__":
    main()
