from hypothesis import given, settings
from hypothesis import strategies as st

from freebycyclic.lattice import hermite_rows, lattice_index, left_kernel, matmul, smith_normal_form

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def _det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    return sum((-1) ** j * A[0][j] * _det([row[:j] + row[j + 1 :] for row in A[1:]]) for j in range(n))


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_smith_normal_form(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_left_kernel_annihilates(N):
    K = left_kernel(N)
    for y in K:
        assert all(sum(y[i] * N[i][j] for i in range(len(N))) == 0 for j in range(len(N[0])))
    assert hermite_rows(K) == K


def test_left_kernel_of_zero_map_is_everything():
    assert left_kernel([[0, 0], [0, 0]]) == [[1, 0], [0, 1]]


def test_left_kernel_is_saturated():
    # y N = 0 forces 2 y1 = y2; the kernel is spanned by (1, 2), not (2, 4)
    assert left_kernel([[2], [-1]]) == [[1, 2]]


def test_lattice_index():
    assert lattice_index([(1, 0), (0, 1)], 2) == 1
    assert lattice_index([(2, 0), (0, 1)], 2) == 2
    assert lattice_index([(1, 1), (2, 2)], 2) == 0
