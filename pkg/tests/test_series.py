import math
from itertools import product

import pytest

from oracles import osp_count_formula
from superspace.osp import stirling2
from superspace.qpoly import QPolynomial, is_unimodal
from superspace.series import (HILBERT_METHODS, BigradedTable, BudgetExceeded, Deadline,
                               _osp_stat_table_scalar, cd_function, duality_window, grfrob,
                               hilbert, hook_expansion, omega_table, rotate_dual,
                               schur_c_function, skewing_lhs, skewing_rhs, z_graded)
from superspace.symfunc import SymFuncVector, multiply, num_syt, partitions

S = SymFuncVector.schur
h, e = SymFuncVector.h, SymFuncVector.e

HILB_632 = [
    [1, 6, 21, 50, 90, 125, 134, 105, 55, 15],
    [6, 35, 119, 273, 463, 575, 511, 301, 105, 20],
    [15, 84, 274, 580, 853, 853, 580, 274, 84, 15],
    [20, 105, 301, 511, 575, 463, 273, 119, 35, 6],
    [15, 55, 105, 134, 125, 90, 50, 21, 6, 1],
]

FROB_322 = [
    [S((3,)), S((3,)) + S((2, 1)), S((2, 1))],
    [S((2, 1)), S((2, 1)) + S((1, 1, 1)), S((1, 1, 1))],
]

SMALL = [(n, k, s) for n in range(1, 5) for k in range(1, n + 1) for s in range(k + 1)]
MEDIUM = [(n, k, s) for n in range(1, 6) for k in range(1, n + 1) for s in range(k + 1)]


# ----------------------------------------------------------------------
# Hilbert series

@pytest.mark.parametrize("method", HILBERT_METHODS)
def test_small_hilbert_matrix(method):
    assert hilbert(3, 2, 2, method).rows == [[1, 3, 2], [2, 3, 1]]


@pytest.mark.parametrize("method", ["osp_coinv", "osp_codinv", "recursive"])
def test_larger_hilbert_matrix(method):
    table = hilbert(6, 3, 2, method)
    assert table.rows == HILB_632
    assert table[2, 4] == 853


@pytest.mark.parametrize("k", range(1, 5))
def test_one_variable(k):
    # span of x^a and x^a theta for a < k
    assert hilbert(1, k, 0).rows == [[1] * k, [1] * k]


@pytest.mark.parametrize("n, k, s", [(n, k, s) for n in range(1, 7) for k in range(1, n + 1)
                                     for s in range(k + 1)])
def test_combinatorial_methods_agree(n, k, s):
    rec = hilbert(n, k, s)
    assert hilbert(n, k, s, "osp_coinv") == rec == hilbert(n, k, s, "osp_codinv")
    for r, row in enumerate(rec.rows):
        assert sum(row) == osp_count_formula(n, k, s, r)


@pytest.mark.parametrize("n, k, s", MEDIUM)
def test_harmonic_method_agrees(n, k, s):
    assert hilbert(n, k, s, "harmonic") == hilbert(n, k, s)


@pytest.mark.parametrize("n, k, s", SMALL)
def test_kernel_and_scalar_tables_agree(n, k, s):
    for stat in ("coinv", "codinv"):
        assert hilbert(n, k, s, "osp_" + stat) == _osp_stat_table_scalar(n, k, s, stat)


def test_hilbert_errors():
    with pytest.raises(ValueError):
        hilbert(3, 1, 2)
    with pytest.raises(ValueError):
        hilbert(3, 2, 1, "magic")
    assert hilbert(2, 3, 3).rows == []


def test_deadline_aborts_harmonic():
    with pytest.raises(BudgetExceeded):
        hilbert(5, 4, 2, "harmonic", deadline=Deadline(0.0))


@pytest.mark.parametrize("n", range(1, 8))
def test_unimodal_rows_and_columns(n):
    for k in range(1, n + 1):
        for s in range(k + 1):
            rows = hilbert(n, k, s).rows
            for row in rows:
                assert is_unimodal(row)
            for col in zip(*rows):
                assert is_unimodal(col)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 7) for k in range(1, n + 1)])
def test_hilbert_palindromic(n, k):
    N, M = duality_window(n, k)
    assert N == (n - k) * (k - 1) + math.comb(k, 2) and M == n - k
    table = hilbert(n, k, k)
    assert table.shape == (M + 1, N + 1)
    assert rotate_dual(table, N, M) == table
    assert table.total() == 2 ** (n - k) * math.factorial(k) * stirling2(n, k)


def test_table_helpers():
    t = BigradedTable([[1, 0, 0], [0, 2, 0], [0, 0, 0]])
    assert t.rows == [[1, 0], [0, 2]]
    assert t.entries() == {(0, 0): 1, (1, 1): 2}
    assert t.row_as_q(1) == QPolynomial([0, 2])
    assert t.latex() == "\\begin{pmatrix}\n1 & 0 \\\\\n0 & 2\n\\end{pmatrix}"
    assert BigradedTable.from_entries(t.entries()) == t
    with pytest.raises(ValueError):
        rotate_dual(t, 0, 0)


# ----------------------------------------------------------------------
# C and D functions

def test_small_c_function():
    c = schur_c_function(3, 2, 2, 0)
    assert c == S((3,)) + S((3,), QPolynomial([0, 1])) + S((2, 1), QPolynomial([0, 1, 1]))


@pytest.mark.parametrize("n, k, s", SMALL)
def test_c_equals_d(n, k, s):
    for r in range(n - s + 1):
        assert cd_function(n, k, s, r, "coinv") == cd_function(n, k, s, r, "codinv")


def test_cd_function_errors():
    with pytest.raises(ValueError):
        cd_function(3, 2, 1, 0, "maj")
    with pytest.raises(ValueError):
        cd_function(3, 2, 1, -1)


# ----------------------------------------------------------------------
# Frobenius images

def test_small_frobenius_matrix():
    assert grfrob(3, 2, 2).rows == FROB_322
    assert grfrob(3, 2, 2, "module_oracle").rows == FROB_322


@pytest.mark.parametrize("n, k, s", SMALL)
def test_frobenius_paths_agree(n, k, s):
    assert grfrob(n, k, s) == grfrob(n, k, s, "module_oracle")


@pytest.mark.parametrize("n, k, s", MEDIUM)
def test_frobenius_dimensions(n, k, s):
    frob = grfrob(n, k, s)
    dims = {key: sum(int(c[0]) * num_syt(la) for la, c in v.coeffs.items())
            for key, v in frob.entries().items()}
    assert BigradedTable.from_entries(dims) == hilbert(n, k, s)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 6) for k in range(1, n + 1)])
def test_invariant_line(n, k):
    assert grfrob(n, k, k)[0, 0] == S((n,))


@pytest.mark.parametrize("n, k", [(n, k) for n in range(1, 6) for k in range(1, n + 1)])
def test_rotational_duality(n, k):
    N, M = duality_window(n, k)
    frob = grfrob(n, k, k)
    assert rotate_dual(frob, N, M) == omega_table(frob)


def test_unknown_frobenius_method():
    with pytest.raises(ValueError):
        grfrob(2, 1, 1, "guess")


# ----------------------------------------------------------------------
# hook expansion

def test_small_hook_expansion():
    got = hook_expansion(3, 2, 2)
    assert got[0] == S((3,), 2) + S((2, 1), 2)
    frob = z_graded(grfrob(3, 2, 2))
    assert got == frob


def test_hook_display_of_degree_one():
    h1e1 = multiply(h(1), e(1))
    terms = [
        (S((2, 1)), S((1,))), (S((1, 1)), S((2,))), (S((2,)), S((1, 1))), (S((1,)), S((2, 1))),
        (S((1, 1)), S((1,)), h(1)), (S((1,)), S((1, 1)), h(1)),
        (S((2,)), S((1,)), e(1)), (S((1,)), S((2,)), e(1)),
        (S((1,)), S((1,)), h1e1),
    ]
    total = SymFuncVector(4)
    for factors in terms:
        total = total + multiply(*factors)
    assert hook_expansion(4, 3, 2)[1] == total


@pytest.mark.parametrize("n, k, s", MEDIUM)
def test_hook_expansion_is_theta_grading(n, k, s):
    assert hook_expansion(n, k, s) == z_graded(grfrob(n, k, s))


# ----------------------------------------------------------------------
# skewing

def test_skewing_worked_instance():
    lhs = skewing_lhs(4, 3, 2, 1, 2)
    assert lhs
    assert lhs == skewing_rhs(4, 3, 2, 1, 2)


@pytest.mark.parametrize("n, k, s", MEDIUM)
def test_skewing_identity(n, k, s):
    for r, j in product(range(n - s + 1), range(1, n + 1)):
        assert skewing_lhs(n, k, s, r, j) == skewing_rhs(n, k, s, r, j), (r, j)


def test_frobenius_rows_are_c_functions():
    n, k, s = 4, 3, 1
    frob = grfrob(n, k, s)
    for r in range(n - s + 1):
        row = frob.row_as_q(r)
        assert row == schur_c_function(n, k, s, r)


def test_c_function_outside_range_is_zero():
    assert not schur_c_function(3, 2, 1, 5)
    assert not schur_c_function(-1, 2, 1, 0)
    assert schur_c_function(0, 2, 0, 0) == S(())


def test_frobenius_partitions_cover_degree():
    for la in grfrob(4, 2, 1)[1, 1].coeffs:
        assert la in partitions(4)
