import pytest

from conftest import pipeline, rose_map
from freebycyclic.dsl import FIXTURES, load_fixture
from freebycyclic.graph_core import signed_chain_matrix, transition_matrix, vertex_action_matrix
from freebycyclic.laurent import LaurentPoly, equivalent
from freebycyclic.torus import (
    change_coordinates,
    char_det,
    compute_presentation,
    coordinate_change,
    lifted_matrices,
    vertex_cycle_product,
    vertex_cycles,
)


def _strings(mat):
    return [[str(x) for x in row] for row in mat]


def test_identity_circle():
    pres = compute_presentation(load_fixture("identity_circle"))
    assert pres.rank == 2
    assert pres.cocycle == {"a": (1,)}
    lifted = lifted_matrices(pres)
    assert _strings(lifted.Mlift) == [["1"]]
    assert _strings(lifted.Plift) == [["1"]]
    (cyc,) = vertex_cycles(pres)
    assert cyc.element == (0, -1)
    assert equivalent(vertex_cycle_product(pres), pres.z - 1)


def test_doubling_has_trivial_K():
    pres = compute_presentation(rose_map(a="aa"))
    assert pres.variables == ("z",)
    lifted = lifted_matrices(pres)
    assert _strings(lifted.Mlift) == [["2"]] and _strings(lifted.Plift) == [["1"]]


def test_o_and_none():
    pres = compute_presentation(load_fixture("o_and_none"))
    assert pres.rank == 1
    assert len(vertex_cycles(pres)) == 2
    assert equivalent(vertex_cycle_product(pres), (pres.z - 1) ** 2)


def test_antiO_reference_splitting():
    pres, lifted, _ = pipeline("antiO")
    assert pres.rank == 2
    a = LaurentPoly.gen("a", pres.variables)
    zero = LaurentPoly.zero(pres.variables)
    one = LaurentPoly.constant(1, pres.variables)
    assert lifted.Plift == [[zero, a], [one, zero]]
    assert str(lifted.entry("Mlift", "b", "a")) == "-a"
    assert str(lifted.entry("Mlift", "e", "b")) == "-2"
    (cyc,) = vertex_cycles(pres)
    assert cyc.orbit == ("v", "w") and cyc.element == (1, -2)
    assert equivalent(vertex_cycle_product(pres), pres.z**2 - a)


@pytest.mark.parametrize("name", FIXTURES)
def test_lifted_invariants(name):
    f = load_fixture(name)
    pres = compute_presentation(f)
    lifted = lifted_matrices(pres)

    def augment(mat):
        return [[p.coefficient_sum() for p in row] for row in mat]

    assert augment(lifted.Mlift) == signed_chain_matrix(f).tolist()
    assert augment(lifted.Alift) == transition_matrix(f).tolist()
    assert augment(lifted.Plift) == vertex_action_matrix(f).tolist()
    for j, e in enumerate(lifted.edges):
        assert sum(lifted.Alift[i][j].coefficient_sum() for i in range(len(lifted.edges))) == len(f.edge_image[e])
        for i in range(len(lifted.edges)):
            assert all(c > 0 for _, c in lifted.Alift[i][j].items())
            assert set(lifted.Mlift[i][j].support()) <= set(lifted.Alift[i][j].support())
    assert equivalent(char_det(pres, lifted.Plift), vertex_cycle_product(pres))
    # K is fixed by the induced action
    fstar = pres.homology_action.data
    for row in pres.project_K:
        assert all(sum(row[i] * (fstar[i][j] - (i == j)) for i in range(len(row))) == 0 for j in range(len(row)))
    for cyc in vertex_cycles(pres):
        assert cyc.element[-1] == -len(cyc.orbit)


def test_tree_change_conjugates_lifted_matrix(antiO):
    p1 = compute_presentation(antiO)
    p2 = compute_presentation(antiO, "v", ["f"])
    T = coordinate_change(p1, p2)
    m1 = [[change_coordinates(x, T) for x in row] for row in lifted_matrices(p1).Mlift]
    m2 = lifted_matrices(p2).Mlift
    # after the coordinate change the matrices differ by a diagonal monomial
    # conjugation and the scalar monomial coming from the z-shift
    scalar = tuple(-row[-1] for row in T[:-1]) + (0,)
    m1 = [[x.shift(scalar) for x in row] for row in m1]
    n = len(m1)
    d = {0: (0, 0)}
    for _ in range(n):
        for i in range(n):
            for j in range(n):
                if m1[i][j].is_zero():
                    assert m2[i][j].is_zero()
                    continue
                (e1, c1), = m1[i][j].items()
                (e2, c2), = m2[i][j].items()
                assert c1 == c2
                shift = tuple(x - y for x, y in zip(e2, e1))
                if j in d and i not in d:
                    d[i] = tuple(x + y for x, y in zip(d[j], shift))
    for i in range(n):
        for j in range(n):
            if not m1[i][j].is_zero():
                (e1, _), = m1[i][j].items()
                (e2, _), = m2[i][j].items()
                assert tuple(x - y for x, y in zip(e2, e1)) == tuple(x - y for x, y in zip(d[i], d[j]))
