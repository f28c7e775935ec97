import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from superspace.qpoly import QPolynomial
from superspace.symfunc import (NotSymmetricError, QSymVector, SymFuncVector, basis_operator,
                                conjugate, descent_set, frobenius_from_character,
                                fundamental_to_schur, hall_inner, hooks, horizontal_strips,
                                is_hook, multiply, num_syt, parse_symfunc, partitions,
                                poly_to_schur, schur_polynomial, schur_to_fundamental,
                                skew_by_box, standard_tableaux_rows, symfunc_to_poly,
                                vertical_strips)

S = SymFuncVector.schur


@st.composite
def symfuncs(draw, n=None):
    n = draw(st.integers(1, 5)) if n is None else n
    coeffs = {}
    for la in partitions(n):
        c = draw(st.lists(st.integers(-2, 2), max_size=3))
        coeffs[la] = QPolynomial(c)
    return SymFuncVector(n, coeffs)


# ----------------------------------------------------------------------
# partitions and tableaux

def test_partitions_and_conjugates():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert is_hook((3, 1, 1)) and not is_hook((2, 2))
    assert hooks(3) == [(3,), (2, 1), (1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_syt_counts_hook_length(n):
    total = 0
    for la in partitions(n):
        hooks_prod = 1
        lac = conjugate(la)
        for i, row in enumerate(la):
            for j in range(row):
                hooks_prod *= row - j + lac[j] - i - 1
        assert num_syt(la) == len(standard_tableaux_rows(la)) == math.factorial(n) // hooks_prod
        total += num_syt(la) ** 2
    assert total == math.factorial(n)


def test_descent_set_rows():
    # row index of each entry; tableau 12/3 has 3 below 2
    assert descent_set((0, 0, 1)) == {2}
    assert descent_set((0, 1, 0)) == {1}
    assert descent_set((0, 1, 2)) == {1, 2}


# ----------------------------------------------------------------------
# fundamental <-> Schur

def test_fundamental_examples():
    F = QSymVector.fundamental
    assert fundamental_to_schur(F([], 3)) == S((3,))
    assert fundamental_to_schur(F([1], 3) + F([2], 3)) == S((2, 1))
    assert fundamental_to_schur(F([1, 2], 3)) == S((1, 1, 1))


def test_not_symmetric():
    with pytest.raises(NotSymmetricError, match="not symmetric"):
        fundamental_to_schur(QSymVector.fundamental([1], 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_through_fundamentals(n):
    for la in partitions(n):
        F = QSymVector(n, schur_to_fundamental(la))
        assert fundamental_to_schur(F) == S(la)


@given(symfuncs())
def test_round_trip_with_q(v):
    assert fundamental_to_schur(v.to_fundamental()) == v


# ----------------------------------------------------------------------
# skewing and omega

def test_skewing_examples():
    assert basis_operator("hperp", S((2, 1)), 1) == S((2,)) + S((1, 1))
    assert basis_operator("omega", S((2, 1))) == S((2, 1))
    assert basis_operator("eperp", S((1, 1)), 2) == S(())
    assert basis_operator("hperp", S((1, 1)), 2) == SymFuncVector(0)
    with pytest.raises(ValueError):
        basis_operator("nope", S((1,)))


def test_strips():
    assert set(horizontal_strips((3, 1), 2)) == {(1, 1), (2,)}
    assert set(vertical_strips((3, 1), 2)) == {(2,)}


@given(symfuncs(), st.integers(1, 5))
def test_omega_intertwines_strips(v, j):
    assert basis_operator("omega", basis_operator("hperp", v, j)) == \
        basis_operator("eperp", basis_operator("omega", v), j)


@given(symfuncs(), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_hperp_is_adjoint_to_h(v, j):
    if j > v.n:
        return
    for mu in partitions(v.n - j):
        lhs = hall_inner(basis_operator("hperp", v, j), S(mu))
        rhs = hall_inner(v, multiply(SymFuncVector.h(j), S(mu)))
        assert lhs == rhs


@given(symfuncs(n=4), symfuncs(n=4))
@settings(max_examples=40)
def test_hperp_images_detect_equality(f, g):
    same = all(basis_operator("hperp", f, j) == basis_operator("hperp", g, j) for j in range(1, 5))
    assert same == (f == g)


def test_skew_by_box_of_hooks_factorizes():
    # s_{(a,1^(m-a))/(1)} = s_{(a-1,1^(m-a))} + s_{(a,1^(m-a-1))} = h_{a-1} e_{m-a}
    for m in range(2, 6):
        for la in hooks(m):
            a = la[0]
            assert skew_by_box(la) == multiply(SymFuncVector.h(a - 1), SymFuncVector.e(m - a))


# ----------------------------------------------------------------------
# explicit polynomials

def bialternant(la, nvars):
    xs = sympy.symbols(f"x1:{nvars + 1}")
    la = list(la) + [0] * (nvars - len(la))
    num = sympy.Matrix(nvars, nvars, lambda i, j: xs[i] ** (la[j] + nvars - 1 - j)).det()
    den = sympy.Matrix(nvars, nvars, lambda i, j: xs[i] ** (nvars - 1 - j)).det()
    poly = sympy.Poly(sympy.cancel(num / den), *xs)
    return {m: int(c) for m, c in poly.terms()}


@pytest.mark.parametrize("la, nvars", [((2, 1), 3), ((3,), 2), ((2, 2), 3), ((2, 1, 1), 4), ((3, 1), 3)])
def test_schur_polynomials_against_bialternant(la, nvars):
    ours = {e: int(c) for e, c in schur_polynomial(la, nvars).items()}
    assert ours == bialternant(la, nvars)


def test_poly_to_schur_examples():
    e2 = {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert poly_to_schur(e2, 3) == S((1, 1))
    h2 = {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert poly_to_schur(h2, 2) == S((2,))
    assert poly_to_schur(symfunc_to_poly(S((2, 1)), 3), 3) == S((2, 1))
    with pytest.raises(NotSymmetricError):
        poly_to_schur({(1, 0): 1}, 2)
    with pytest.raises(ValueError):
        poly_to_schur(e2, 1)


def test_products():
    assert multiply(S((1,)), S((1,))) == S((2,)) + S((1, 1))
    assert multiply(S((2, 1)), S((1,))) == S((3, 1)) + S((2, 2)) + S((2, 1, 1))


# ----------------------------------------------------------------------
# characteristic map

def test_characteristic_map_examples():
    assert frobenius_from_character(3, {p: 1 for p in partitions(3)}) == S((3,))
    sign = {p: (-1) ** (3 - len(p)) for p in partitions(3)}
    assert frobenius_from_character(3, sign) == S((1, 1, 1))
    regular = {(1, 1, 1): 6, (2, 1): 0, (3,): 0}
    assert frobenius_from_character(3, regular) == S((3,)) + S((2, 1), 2) + S((1, 1, 1))
    with pytest.raises(KeyError):
        frobenius_from_character(3, {(3,): 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_regular_representation(n):
    chi = {p: (math.factorial(n) if p == (1,) * n else 0) for p in partitions(n)}
    expected = SymFuncVector(n, {la: num_syt(la) for la in partitions(n)})
    assert frobenius_from_character(n, chi) == expected


# ----------------------------------------------------------------------
# text and json

def test_text_round_trip():
    v = S((3,)) + S((2, 1), QPolynomial([0, 1, 1]))
    text = str(v)
    assert text == "s[3] + (q+q^2)*s[2,1]"
    assert parse_symfunc(text) == v
    assert SymFuncVector.from_json(v.to_json()) == v


@given(symfuncs())
def test_text_round_trip_random(v):
    assert parse_symfunc(str(v), v.n) == v


def test_dimension_and_specialization():
    v = S((2, 1), QPolynomial([1, 1])) + S((3,))
    assert v.dimension() == QPolynomial([3, 2])
    assert v.at_q(1) == S((2, 1), 2) + S((3,))
    assert v.q_coefficient(1) == S((2, 1))
    assert hall_inner(v, S((2, 1))) == QPolynomial([1, 1])
    assert Fraction(1) == hall_inner(S((3,)), S((3,)))[0]
