"""Cross-check the determinant pipeline against naive computations.

The normalized McMullen polynomial is recomputed as a sum over families of
disjoint cycles in the lifted transition graph, characteristic polynomials
as permutation sums, and the stretch factor from iterated edge lengths.

Run with ``python3 demos/brute_force_checks.py``.
"""

from freebycyclic.dsl import FIXTURES, load_fixture_document
from freebycyclic.invariants import invariants_of
from freebycyclic.oracle import growth_ratios, iterate_growth, run_oracles


def main():
    for name in FIXTURES:
        doc = load_fixture_document(name)
        pres, lifted, _ = invariants_of(doc.graph_map, doc.basepoint, doc.tree)
        reports = run_oracles(doc.graph_map, pres, lifted)
        status = ", ".join(f"{r.name}={'ok' if r.passed else 'MISMATCH'}" for r in reports)
        print(f"{name:22} {status}")

    f = load_fixture_document("o_and_none").graph_map
    lengths = iterate_growth(f, f.graph.edges[0], 10)
    print()
    print("lengths of f^k(a):", lengths)
    print("successive ratios:", [round(r, 4) for r in growth_ratios(lengths)])


if __name__ == "__main__":
    main()
