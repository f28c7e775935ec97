"""Named identity suites with machine-readable pass/fail reports.

Each suite sweeps ``1 <= n <= max_n`` and ``0 <= s <= k <= n`` (optionally
pinned to one ``k`` or ``s``) and yields one instance per identity checked.
"""

from __future__ import annotations

from .core import odot
from .osp import count_osp, substaircase
from .osp_batch import code_bijection_check
from .qpoly import is_unimodal
from .series import (BudgetExceeded, Deadline, cd_function, cycle_representative, duality_window,
                     grfrob, hilbert, omega_table, rotate_dual, skewing_lhs, skewing_rhs)
from .symfunc import partitions
from .vandermonde import (coinvariant_slice_quotients, delta, harmonic_basis, ideal_generators,
                          independence_rank, involution, involution_brute, slice_character)

DEFAULT_MAX_N = {
    "skewing": 5,
    "poincare": 6,
    "rotational": 5,
    "unimodal": 7,
    "cd_equal": 6,
    "bijection": 6,
    "involution": 6,
    "annihilation": 5,
    "fields_conjecture": 4,
}

# suites whose instances are evidence for an open statement, never failures
INFORMATIONAL = {"fields_conjecture"}

BRUTE_INVOLUTION_MAX_N = 5
FIELDS_CHARACTER_MAX_N = 3


def _triples(max_n, k=None, s=None, equal=False):
    for n in range(1, max_n + 1):
        for kk in range(1, n + 1):
            if k is not None and kk != k:
                continue
            for ss in ([kk] if equal else range(kk + 1)):
                if s is not None and ss != s:
                    continue
                yield n, kk, ss


def _skewing(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        for r in range(n - ss + 1):
            for j in range(1, n + 1):
                deadline.check()
                ok = skewing_lhs(n, kk, ss, r, j) == skewing_rhs(n, kk, ss, r, j)
                yield {"n": n, "k": kk, "s": ss, "r": r, "j": j}, ok


def _poincare(max_n, k, s, deadline):
    for n, kk, _ in _triples(max_n, k, s, equal=True):
        deadline.check()
        N, M = duality_window(n, kk)
        table = hilbert(n, kk, kk)
        ok = table == rotate_dual(table, N, M)
        yield {"n": n, "k": kk, "s": kk, "N": N, "M": M}, ok


def _rotational(max_n, k, s, deadline):
    for n, kk, _ in _triples(max_n, k, s, equal=True):
        deadline.check()
        N, M = duality_window(n, kk)
        table = grfrob(n, kk, kk)
        ok = rotate_dual(table, N, M) == omega_table(table)
        yield {"n": n, "k": kk, "s": kk, "N": N, "M": M}, ok


def _unimodal(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        deadline.check()
        rows = hilbert(n, kk, ss).rows
        cols = [list(c) for c in zip(*rows)]
        ok = all(is_unimodal(r) for r in rows) and all(is_unimodal(c) for c in cols)
        yield {"n": n, "k": kk, "s": ss}, ok


def _cd_equal(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        for r in range(n - ss + 1):
            deadline.check()
            ok = cd_function(n, kk, ss, r, "coinv") == cd_function(n, kk, ss, r, "codinv")
            yield {"n": n, "k": kk, "s": ss, "r": r}, ok


def _bijection(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        deadline.check()
        yield {"n": n, "k": kk, "s": ss}, code_bijection_check(n, kk, ss)["pass"]


def _involution(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        ok = True
        brute = n <= BRUTE_INVOLUTION_MAX_N
        for word in substaircase(n, kk, ss):
            deadline.check()
            image = involution(word, n, kk, ss).word
            ok &= involution(image, n, kk, ss).word == word
            if brute:
                ok &= involution_brute(word, n, kk, ss)[0] == image
        yield {"n": n, "k": kk, "s": ss, "brute_force": brute}, ok


def _annihilation(max_n, k, s, deadline):
    for n, kk, ss in _triples(max_n, k, s):
        deadline.check()
        d = delta(n, kk, ss)
        killed = all(not odot(g, d) for g in ideal_generators(n, kk, ss).all())
        basis = harmonic_basis(n, kk, ss, deadline=deadline)
        full = independence_rank(basis.elements.values()) == count_osp(n, kk, ss)
        yield {"n": n, "k": kk, "s": ss}, killed and full


def _fields_conjecture(max_n, k, s, deadline):
    for n, kk, _ in _triples(max_n, k, s, equal=True):
        deadline.check()
        (a_dims,), (b_dims,) = coinvariant_slice_quotients(n, kk)
        ok = a_dims == b_dims
        entry = {"n": n, "k": kk, "A": a_dims, "B": b_dims}
        if ok and n <= FIELDS_CHARACTER_MAX_N:
            top = len(a_dims) - 1
            for mu in partitions(n):
                w = cycle_representative(mu)
                ok &= slice_character(n, kk, "A", w, top) == slice_character(n, kk, "B", w, top)
            entry["characters_compared"] = True
        yield entry, ok


SUITES = {
    "skewing": _skewing,
    "poincare": _poincare,
    "rotational": _rotational,
    "unimodal": _unimodal,
    "cd_equal": _cd_equal,
    "bijection": _bijection,
    "involution": _involution,
    "annihilation": _annihilation,
    "fields_conjecture": _fields_conjecture,
}


def verify(suite: str, max_n: int | None = None, k: int | None = None, s: int | None = None,
           max_seconds: float | None = None) -> dict:
    """Run one suite and return its report.

    A run cut short by ``max_seconds`` keeps the instances finished so far,
    sets ``"aborted"`` and reports ``all_pass`` as false.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    max_n = DEFAULT_MAX_N[suite] if max_n is None else max_n
    params = {"n": max_n, "k": k, "s": s}
    instances = []
    report = {"suite": suite, "params": params, "instances": instances}
    try:
        for entry, ok in SUITES[suite](max_n, k, s, Deadline(max_seconds)):
            instances.append({"input": entry, "pass": bool(ok)})
    except BudgetExceeded as exc:
        report["aborted"] = str(exc)
    report["all_pass"] = "aborted" not in report and all(i["pass"] for i in instances)
    if suite in INFORMATIONAL:
        report["label"] = "conjecture evidence"
    return report
