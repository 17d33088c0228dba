import numpy as np
import pytest

from conftest import pipeline
from freebycyclic.dsl import FIXTURES, load_fixture
from freebycyclic.errors import TooLarge
from freebycyclic.graph_core import char_poly
from freebycyclic.invariants import mcmullen_polynomial
from freebycyclic.laurent import LaurentPoly
from freebycyclic.oracle import (
    brute_char_poly,
    growth_ratios,
    iterate_growth,
    multicycle_expansion,
    run_oracles,
    simple_cycles,
)


def test_simple_cycles_triangle():
    adj = {0: {1}, 1: {2, 0}, 2: {0}}
    assert sorted(simple_cycles(adj)) == [[0, 1], [0, 1, 2]]


def test_simple_cycles_loop():
    assert simple_cycles({0: {0}}) == [[0]]


@pytest.mark.parametrize(
    "name, expected",
    [("doubling", "1 - 2z^(-1)"), ("swap_rose", "1 - z^(-2)")],
)
def test_multicycle_small(name, expected):
    pres, lifted, bundle = pipeline(name)
    got = multicycle_expansion(lifted.Alift)
    assert got == bundle.mcmullen_normalized
    zinv = LaurentPoly.monomial((0,) * (bundle.rank - 1) + (-1,), bundle.variables)
    if name == "doubling":
        assert got == 1 - 2 * zinv
    else:
        assert got == 1 - zinv * zinv


def test_multicycle_antiO():
    pres, lifted, bundle = pipeline("antiO")
    _, m_norm = mcmullen_polynomial(pres, lifted)
    assert multicycle_expansion(lifted.Alift) == m_norm


def test_multicycle_too_large():
    with pytest.raises(TooLarge):
        multicycle_expansion([[None]], n_edges=13)


@pytest.mark.parametrize(
    "M",
    [[[2]], [[0, 1], [1, 0]], [[1, 1, 0], [0, 1, 1], [1, 0, 1]], [[3, -1, 2, 0], [1, 0, 0, 4], [-2, 1, 1, 1], [0, 0, 5, -1]]],
)
def test_brute_char_poly_matches(M):
    assert brute_char_poly(M) == char_poly(np.array(M))


def test_brute_char_poly_random():
    rng = np.random.default_rng(3)
    for n in range(1, 7):
        M = rng.integers(-3, 4, size=(n, n))
        assert brute_char_poly(M) == char_poly(M)


def test_brute_char_poly_too_large():
    with pytest.raises(TooLarge):
        brute_char_poly(np.eye(9, dtype=int))


@pytest.mark.parametrize("name, lam", [("o_and_none", 4.61), ("anti_anti", 2.17)])
def test_growth(name, lam):
    f = load_fixture(name)
    lengths = iterate_growth(f, f.graph.edges[0], 12)
    assert lengths[0] == 1 and len(lengths) == 13
    assert growth_ratios(lengths)[-1] == pytest.approx(lam, abs=0.02)


def test_growth_too_many_iterates():
    f = load_fixture("doubling")
    with pytest.raises(TooLarge):
        iterate_growth(f, f.graph.edges[0], 13)


@pytest.mark.parametrize("name", FIXTURES)
def test_run_oracles(name):
    pres, lifted, _ = pipeline(name)
    reports = run_oracles(load_fixture(name), pres, lifted)
    assert reports
    for rep in reports:
        assert rep.passed, rep
