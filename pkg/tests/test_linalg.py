from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from balanced.linalg import (
    DEPENDENT,
    INCONSISTENT,
    INDEPENDENT,
    Echelon,
    integer_row,
    nullspace,
    phase_one,
    rank,
    solve,
)

small = st.integers(-4, 4)
matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m))
)


def matvec(A, x):
    return [sum(F(a) * xi for a, xi in zip(row, x)) for row in A]


def test_integer_row_clears_denominators():
    assert integer_row([F(1, 2), F(1, 3), 1]) == [3, 2, 6]


def test_add_classifies_rows():
    E = Echelon(2)
    assert E.add([1, 1, 1]) == INDEPENDENT
    assert E.add([2, 2, 2]) == DEPENDENT
    assert E.add([1, 1, 5]) == INCONSISTENT
    assert E.inconsistent


def test_solve_unique():
    sol = solve([[1, 1], [1, -1]], [1, 0])
    assert sol.unique and sol.particular == (F(1, 2), F(1, 2))


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_nullspace_of_empty_system_is_identity():
    assert nullspace([], 3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@given(matrices)
def test_kernel_is_primitive_basis(A):
    n = len(A[0])
    K = nullspace(A)
    assert len(K) == n - rank(A)
    for v in K:
        assert all(x == 0 for x in matvec(A, v))
        lead = next(x for x in v if x)
        assert lead > 0
    # independent: appending the basis as rows raises the rank by len(K)
    if K:
        assert rank(K) == len(K)


@given(matrices, st.lists(small, min_size=5, max_size=5))
def test_solve_reproduces_rhs(A, x0):
    x0 = x0[: len(A[0])]
    b = matvec(A, x0)
    sol = solve(A, b)
    assert sol is not None
    assert matvec(A, sol.particular) == b


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_phase_one_certificates(A, b):
    b = b[: len(A)]
    res = phase_one(A, b)
    if res.feasible:
        assert all(x >= 0 for x in res.x)
        assert matvec(A, res.x) == [F(v) for v in b]
    else:
        y = res.farkas
        cols = list(zip(*A))
        assert all(sum(yi * a for yi, a in zip(y, col)) <= 0 for col in cols)
        assert sum(yi * bi for yi, bi in zip(y, b)) > 0


def test_phase_one_simple_cases():
    assert phase_one([[1, 1]], [1]).feasible
    res = phase_one([[1, 1]], [-1])
    assert not res.feasible and res.farkas[0] < 0


def test_row_length_checked():
    with pytest.raises(ValueError):
        Echelon(2).add([1, 2])
