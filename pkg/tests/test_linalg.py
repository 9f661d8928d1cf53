import random
from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from grasstorus.linalg import (
    column_echelon, integer_kernel, integer_solve, lattice_basis, lp_maximize, nullspace, rank, rref,
)

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(matrices)
def test_rank_and_nullspace_match_sympy(rows):
    M = sp.Matrix(rows)
    assert rank(rows) == M.rank()
    ns = nullspace(rows, M.cols)
    assert len(ns) == M.cols - M.rank()
    for v in ns:
        assert all(x == 0 for x in M * sp.Matrix(v))


@given(matrices)
def test_column_echelon_is_unimodular(rows):
    ncols = len(rows[0])
    H, U, pivots = column_echelon(rows, ncols)
    assert abs(sp.Matrix(U).det()) == 1
    assert sp.Matrix(rows) * sp.Matrix(U) == sp.Matrix(H)


@given(matrices)
def test_integer_kernel_is_saturated(rows):
    ncols = len(rows[0])
    K = integer_kernel(rows, ncols)
    M = sp.Matrix(rows)
    assert len(K) == ncols - M.rank()
    for v in K:
        assert all(x == 0 for x in M * sp.Matrix(v))
    if K:
        # saturated: the gcd of maximal minors is 1
        KM = sp.Matrix(K)
        from itertools import combinations
        from math import gcd

        g = 0
        for cols in combinations(range(ncols), len(K)):
            g = gcd(g, int(KM.extract(list(range(len(K))), list(cols)).det()))
        assert g == 1


@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_integer_solve(rows, x):
    ncols = len(rows[0])
    x = x[:ncols]
    rhs = [sum(a * b for a, b in zip(r, x)) for r in rows]
    sol = integer_solve(rows, ncols, rhs)
    assert sol is not None
    assert [sum(a * b for a, b in zip(r, sol)) for r in rows] == rhs


def test_integer_solve_detects_non_integrality():
    assert integer_solve([[2, 4]], 2, [3]) is None
    assert integer_solve([[1, 0], [1, 0]], 2, [1, 2]) is None


def test_lattice_basis_spans_same_lattice():
    rng = random.Random(3)
    for _ in range(20):
        gens = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(rng.randint(1, 5))]
        basis = lattice_basis(gens, 4)
        assert sp.Matrix(basis).rank() == len(basis) == sp.Matrix(gens).rank()
        for g in gens:
            cols = [[b[i] for b in basis] for i in range(4)]
            assert integer_solve(cols, len(basis), g) is not None
        for b in basis:
            cols = [[g[i] for g in gens] for i in range(4)]
            assert integer_solve(cols, len(gens), b) is not None


def test_rref_example():
    m, piv = rref([[2, 4], [1, 3]])
    assert m == [[1, 0], [0, 1]] and piv == [0, 1]


def test_lp():
    # max x + y with x + y + s = 3
    status, value, x = lp_maximize([[1, 1, 1]], [3], [1, 1, 0])
    assert status == "optimal" and value == 3
    assert lp_maximize([[1, 1]], [-1], [1, 0])[0] == "infeasible"
    assert lp_maximize([[1, -1]], [0], [1, 0])[0] == "unbounded"
    status, value, x = lp_maximize([[1, 2], [3, 1]], [Fraction(4), Fraction(7)], [1, 1])
    assert status == "optimal" and x == [Fraction(2), Fraction(1)]
