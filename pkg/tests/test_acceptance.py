"""Acceptance checks, one per criterion, each printing a PASS/FAIL line with its timing."""

import time

import pytest

from oracles import substaircase_by_shuffles
from superspace import osp as osp_mod
from superspace import series as series_mod
from superspace.osp import code, coinv, count_osp, decode, format_osp, parse_osp, substaircase
from superspace.osp_batch import code_bijection_check
from superspace.qpoly import is_unimodal
from superspace.series import (HILBERT_METHODS, cd_function, duality_window, grfrob, hilbert,
                               hook_expansion, omega_table, rotate_dual, z_graded)
from superspace.symfunc import SymFuncVector, multiply
from superspace.vandermonde import coinvariant_slice_quotients, involution
from superspace.verify import verify
from superspace.words import format_word, parse_word

S = SymFuncVector.schur

HILB_632 = [
    [1, 6, 21, 50, 90, 125, 134, 105, 55, 15],
    [6, 35, 119, 273, 463, 575, 511, 301, 105, 20],
    [15, 84, 274, 580, 853, 853, 580, 274, 84, 15],
    [20, 105, 301, 511, 575, 463, 273, 119, 35, 6],
    [15, 55, 105, 134, 125, 90, 50, 21, 6, 1],
]


def cold():
    """Drop memoised results so each criterion is timed from scratch."""
    for fn in (series_mod._hilbert_recursive, series_mod._cd_counts, series_mod.schur_c_function,
               osp_mod._substaircase, osp_mod.count_substaircase):
        fn.cache_clear()


@pytest.fixture
def report(capsys):
    cold()
    start = time.perf_counter()

    def emit(number, ok, limit=None, detail=""):
        elapsed = time.perf_counter() - start
        in_time = limit is None or elapsed < limit
        verdict = "PASS" if ok and in_time else "FAIL"
        budget = f" (limit {limit:g}s)" if limit else ""
        with capsys.disabled():
            print(f"\ncriterion {number:2d}: {verdict}  {elapsed:7.2f}s{budget}  {detail}")
        assert ok, detail
        assert in_time, f"{elapsed:.1f}s over the {limit}s limit"

    return emit


def test_small_hilbert_matrix_all_methods(report):
    tables = {m: hilbert(3, 2, 2, m).rows for m in HILBERT_METHODS}
    ok = all(t == [[1, 3, 2], [2, 3, 1]] for t in tables.values())
    report(1, ok, 1, "Hilb(3,2,2) by four methods")


def test_larger_hilbert_matrix(report):
    tables = {m: hilbert(6, 3, 2, m) for m in ("osp_coinv", "osp_codinv", "recursive")}
    ok = all(t.rows == HILB_632 and t[2, 4] == 853 for t in tables.values())
    report(2, ok, 30, "Hilb(6,3,2) by three methods, entry (2,4) = 853")


def test_small_frobenius_matrix(report):
    expected = [[S((3,)), S((3,)) + S((2, 1)), S((2, 1))],
                [S((2, 1)), S((2, 1)) + S((1, 1, 1)), S((1, 1, 1))]]
    comb = grfrob(3, 2, 2)
    ok = comb.rows == expected and grfrob(3, 2, 2, "module_oracle") == comb
    report(3, ok, 10, "grFrob(3,2,2) combinatorial = paper matrix = module oracle")


def test_c_equals_d(report):
    checked = 0
    ok = True
    for n in range(1, 7):
        for k in range(1, n + 2):
            for s in range(k + 1):
                for r in range(max(n - s + 1, 0)):
                    ok &= cd_function(n, k, s, r, "coinv") == cd_function(n, k, s, r, "codinv")
                    checked += 1
    report(4, ok, 300, f"C = D on {checked} (n,k,s,r), n <= 6, k <= n+1")


def test_code_bijection(report):
    sizes = 0
    ok = True
    for n in range(1, 7):
        for k in range(1, n + 2):
            for s in range(k + 1):
                res = code_bijection_check(n, k, s)
                ok &= res["pass"] and res["osp"] == count_osp(n, k, s)
                sizes += res["osp"]
    for k in range(1, 7):
        for s in range(k + 1):
            ok &= set(substaircase(6, k, s)) == substaircase_by_shuffles(6, k, s)
    inserted = decode(parse_word("1,~2,0,~1,0,4,0,~2"), 8, 5, 3)
    ok &= format_osp(inserted) == "(5,7|1|3,~4,~8||~2,6)"
    sigma = parse_osp("(2,~5|3,6,~8,9||~1,~4,7|)", 2)
    ok &= coinv(sigma) == 11 and format_word(code(sigma)) == "~1,1,0,~3,~0,1,3,~1,1"
    ok &= decode(code(sigma), 9, 5, 2) == sigma
    report(5, ok, None, f"code/decode inverse on {sizes} superpartitions, worked examples")


def test_annihilation_and_rank(report):
    res = verify("annihilation", max_n=5)
    triples = sum(k + 1 for n in range(1, 6) for k in range(1, n + 1))
    ok = res["all_pass"] and len(res["instances"]) == triples
    report(6, ok, 600, f"generators kill delta, harmonic rank full, {len(res['instances'])} triples")


def test_involution(report):
    res = verify("involution", max_n=6)
    u = parse_word("~1,3,0,5,2,0,~2,~5,0")
    worked = involution(u, 9, 7, 4)
    ok = res["all_pass"] and worked.word == parse_word("5,0,2,~1,~4,1,4,1,0")
    ok &= worked.staircase == parse_word("~6,3,2,~6,~6,1,~6,~6,0")
    brute = sum(i["input"]["brute_force"] for i in res["instances"])
    report(7, ok, None, f"fast = brute on {brute} triples (n <= 5), involutive to n = 6, worked example")


def test_skewing(report):
    res = verify("skewing", max_n=5)
    report(8, res["all_pass"], None, f"h_j-perp identity on {len(res['instances'])} (n,k,s,r,j)")


def test_dualities(report):
    ok = True
    for n in range(1, 6):
        for k in range(1, n + 1):
            N, M = duality_window(n, k)
            table = hilbert(n, k, k)
            frob = grfrob(n, k, k)
            ok &= rotate_dual(table, N, M) == table
            ok &= rotate_dual(frob, N, M) == omega_table(frob)
    report(9, ok, None, "palindromic Hilbert matrix and rotational duality, n <= 5, s = k")


def test_hook_expansion(report):
    ok = all(hook_expansion(n, k, s) == z_graded(grfrob(n, k, s))
             for n in range(1, 6) for k in range(1, n + 1) for s in range(k + 1))
    h1, e1 = SymFuncVector.h(1), SymFuncVector.e(1)
    display = [(S((2, 1)), S((1,))), (S((1, 1)), S((2,))), (S((2,)), S((1, 1))), (S((1,)), S((2, 1))),
               (S((1, 1)), S((1,)), h1), (S((1,)), S((1, 1)), h1),
               (S((2,)), S((1,)), e1), (S((1,)), S((2,)), e1),
               (S((1,)), S((1,)), multiply(h1, e1))]
    total = SymFuncVector(4)
    for factors in display:
        total = total + multiply(*factors)
    ok &= hook_expansion(4, 3, 2)[1] == total
    report(10, ok, None, "hook expansion = theta-grading of grFrob, n <= 5; (4,3,2) z^1 display")


def test_b_quotient_and_fields_evidence(report):
    ok = True
    for n in range(1, 5):
        for k in range(1, n + 1):
            (_,), (b,) = coinvariant_slice_quotients(n, k)
            ok &= b == hilbert(n, k, k).rows[n - k]
    evidence = verify("fields_conjecture", max_n=4)
    agree = sum(i["pass"] for i in evidence["instances"])
    report(11, ok, None, f"B-quotient = row n-k for n <= 4; A = B evidence {agree}/{len(evidence['instances'])}")


def test_unimodality(report):
    ok = True
    count = 0
    for n in range(1, 8):
        for k in range(1, n + 1):
            for s in range(k + 1):
                rows = hilbert(n, k, s).rows
                ok &= all(is_unimodal(r) for r in rows) and all(is_unimodal(c) for c in zip(*rows))
                count += 1
    report(12, ok, 120, f"rows and columns unimodal for {count} triples, n <= 7")
