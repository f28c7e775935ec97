"""Bigraded Hilbert series, C/D quasisymmetric functions and Frobenius images.

Tables follow the matrix convention used throughout: row ``r`` is the
theta-degree (the power of z), column ``i`` the x-degree (the power of q).
"""

from __future__ import annotations

import time
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .core import Permutation, act, superlex_key
from .linalg import Echelon
from .osp import code, codinv, enumerate_osp, reading_word_ides
from .osp_batch import stat_counts
from .qpoly import ONE, QPolynomial, qbinom, qint
from .symfunc import (QSymVector, SymFuncVector, basis_operator, frobenius_from_character,
                      fundamental_to_schur, hooks, multiply, partitions, skew_by_box)
from .vandermonde import harmonic_basis, top_degree


class BudgetExceeded(RuntimeError):
    pass


class Deadline:
    """Soft wall-clock budget; ``check()`` raises once it has run out."""

    def __init__(self, seconds: float | None):
        self.stop = None if seconds is None else time.monotonic() + seconds

    def check(self) -> None:
        if self.stop is not None and time.monotonic() > self.stop:
            raise BudgetExceeded("time budget exhausted")


def _check(n, k, s):
    if k < s or s < 0:
        raise ValueError("need 0 <= s <= k")
    if n < 0:
        raise ValueError("need n >= 0")


# ----------------------------------------------------------------------
# tables

class BigradedTable:
    """Rectangular matrix of entries, trailing zero rows/columns trimmed."""

    def __init__(self, rows, zero=0):
        self.zero = zero
        rows = [list(r) for r in rows]
        width = max((i + 1 for r in rows for i, v in enumerate(r) if v), default=0)
        rows = [r[:width] + [zero] * (width - len(r[:width])) for r in rows]
        while rows and not any(rows[-1]):
            rows.pop()
        self.rows = rows

    @classmethod
    def from_entries(cls, entries: dict, zero=0) -> "BigradedTable":
        """``entries[(r, i)]`` is the z^r q^i coefficient."""
        if not entries:
            return cls([], zero)
        height = max(r for r, _ in entries) + 1
        width = max(i for _, i in entries) + 1
        return cls([[entries.get((r, i), zero) for i in range(width)] for r in range(height)], zero)

    @property
    def shape(self) -> tuple:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ri):
        r, i = ri
        if 0 <= r < len(self.rows) and 0 <= i < len(self.rows[r]):
            return self.rows[r][i]
        return self.zero

    def entries(self) -> dict:
        return {(r, i): v for r, row in enumerate(self.rows) for i, v in enumerate(row) if v}

    def __eq__(self, other) -> bool:
        if isinstance(other, BigradedTable):
            return self.rows == other.rows
        if isinstance(other, list):
            return self.rows == BigradedTable(other, self.zero).rows
        return NotImplemented

    def total(self):
        out = None
        for row in self.rows:
            for v in row:
                out = v if out is None else out + v
        return self.zero if out is None else out

    def row_as_q(self, r: int):
        """Row ``r`` folded into q-polynomial coefficients."""
        if self.zero == 0:
            return QPolynomial(self.rows[r]) if r < len(self.rows) else QPolynomial()
        out = self.zero
        for i, v in enumerate(self.rows[r] if r < len(self.rows) else ()):
            out = out + v * QPolynomial.monomial(i)
        return out

    def to_json(self):
        def enc(v):
            if isinstance(v, SymFuncVector):
                return v.to_json()
            return int(v) if Fraction(v).denominator == 1 else str(v)
        return [[enc(v) for v in row] for row in self.rows]

    def latex(self) -> str:
        def cell(v):
            if isinstance(v, SymFuncVector):
                return symfunc_latex(v)
            return str(v)
        body = " \\\\\n".join(" & ".join(cell(v) for v in row) for row in self.rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"

    def text(self) -> str:
        if self.zero == 0:
            return "\n".join(" ".join(str(v) for v in row) for row in self.rows)
        lines = []
        for r, row in enumerate(self.rows):
            for i, v in enumerate(row):
                if v:
                    lines.append(f"z^{r} q^{i}: {v}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"BigradedTable({self.rows!r})"


def symfunc_latex(v: SymFuncVector) -> str:
    if not v:
        return "0"
    parts = []
    for la in sorted(v.coeffs, reverse=True):
        c = v.coeffs[la]
        basis = "s_{" + ",".join(map(str, la)) + "}" if la else "1"
        if c == ONE:
            term = basis
        else:
            term = f"({c})" + ("" if basis == "1" else " " + basis)
        parts.append(term)
    return " + ".join(parts)


# ----------------------------------------------------------------------
# Hilbert series

def _osp_stat_table(n, k, s, stat):
    counts = Counter()
    for (r, st, value, _), c in _cd_counts(n, k, s).items():
        if st == stat:
            counts[r, value] += c
    return BigradedTable.from_entries(dict(counts))


def _osp_stat_table_scalar(n, k, s, stat):
    counts = Counter()
    for sigma in enumerate_osp(n, k, s):
        value = sum(c.value for c in code(sigma)) if stat == "coinv" else codinv(sigma)
        counts[sigma.r, value] += 1
    return BigradedTable.from_entries(dict(counts))


@lru_cache(maxsize=None)
def _hilbert_recursive(n, k, s) -> dict:
    """{(r, i): dim}"""
    if s > n:
        return {}
    if n == 0:
        return {(0, 0): 1}
    out: Counter = Counter()
    factor = qint(k - s)
    for (r, i), c in _hilbert_recursive(n - 1, k, s).items():
        for d, f in enumerate(factor.coeffs):
            out[r + 1, i + d] += c * int(f)        # z * [k-s]_q
            out[r, i + s + d] += c * int(f)        # q^s * [k-s]_q
    if s:
        for (r, i), c in _hilbert_recursive(n - 1, k, s - 1).items():
            for d in range(s):
                out[r, i + d] += c
    return {key: v for key, v in out.items() if v}


def hilbert(n: int, k: int, s: int, method: str = "recursive", deadline: Deadline | None = None) -> BigradedTable:
    """Bigraded Hilbert series of the quotient of type (n, k, s).

    ``method`` is one of ``osp_coinv``, ``osp_codinv``, ``recursive`` or
    ``harmonic``; all four agree.
    """
    _check(n, k, s)
    if method == "recursive":
        return BigradedTable.from_entries(_hilbert_recursive(n, k, s))
    if method in ("osp_coinv", "osp_codinv"):
        return _osp_stat_table(n, k, s, method[4:])
    if method == "harmonic":
        if n < s:
            return BigradedTable([])
        basis = harmonic_basis(n, k, s, deadline=deadline)
        return BigradedTable(basis.bigraded_dims())
    raise ValueError(f"unknown method {method!r}")


HILBERT_METHODS = ("osp_coinv", "osp_codinv", "recursive", "harmonic")


# ----------------------------------------------------------------------
# C and D functions

@lru_cache(maxsize=None)
def _cd_counts(n, k, s):
    """{(r, stat, value, ides): count} for both statistics, vectorised."""
    return stat_counts(n, k, s)


def _cd_counts_scalar(n, k, s):
    """Object-by-object version of :func:`_cd_counts`, kept as a reference."""
    counts: Counter = Counter()
    for sigma in enumerate_osp(n, k, s):
        ides = reading_word_ides(sigma)[1]
        r = sigma.r
        counts[r, "coinv", sum(c.value for c in code(sigma)), ides] += 1
        counts[r, "codinv", codinv(sigma), ides] += 1
    return dict(counts)


def cd_function(n: int, k: int, s: int, r: int, stat: str = "coinv") -> QSymVector:
    """Sum of q^stat(sigma) F_{iDes(read sigma)} over superpartitions with r bars."""
    _check(n, k, s)
    if stat not in ("coinv", "codinv"):
        raise ValueError(f"unknown statistic {stat!r}")
    if r < 0:
        raise ValueError("need r >= 0")
    coeffs: dict = {}
    for (rr, st, value, ides), c in _cd_counts(n, k, s).items():
        if rr == r and st == stat:
            coeffs[ides] = coeffs.get(ides, QPolynomial()) + QPolynomial.monomial(value, c)
    return QSymVector(n, coeffs)


@lru_cache(maxsize=None)
def schur_c_function(n: int, k: int, s: int, r: int) -> SymFuncVector:
    """Schur expansion of the coinv C-function (zero outside the valid range)."""
    if n < 0 or s < 0 or k < s or r < 0 or r > n - s:
        return SymFuncVector(max(n, 0))
    return fundamental_to_schur(cd_function(n, k, s, r, "coinv"))


# ----------------------------------------------------------------------
# Frobenius images

def _split_q(v: SymFuncVector, r: int, entries: dict) -> None:
    for i in range(v.q_degree() + 1):
        piece = v.q_coefficient(i)
        if piece:
            entries[r, i] = piece


def cycle_representative(mu) -> Permutation:
    n = sum(mu)
    cycles, start = [], 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(n, *cycles)


def grfrob(n: int, k: int, s: int, method: str = "combinatorial", deadline: Deadline | None = None) -> BigradedTable:
    """Bigraded Frobenius image as a table of Schur expansions."""
    _check(n, k, s)
    entries: dict = {}
    if method == "combinatorial":
        for r in range(max(n - s + 1, 0)):
            _split_q(schur_c_function(n, k, s, r), r, entries)
    elif method == "module_oracle":
        entries = _module_oracle(n, k, s, deadline)
    else:
        raise ValueError(f"unknown method {method!r}")
    return BigradedTable.from_entries(entries, zero=SymFuncVector(n))


def _module_oracle(n, k, s, deadline):
    if n < s:
        return {}
    basis = harmonic_basis(n, k, s, deadline=deadline)
    slices: dict = {}
    for word, f in basis.elements.items():
        (bideg,) = f.bidegrees()
        slices.setdefault(bideg, []).append(f)
    reps = {mu: cycle_representative(mu) for mu in partitions(n)}
    entries = {}
    for (i, r), elems in slices.items():
        ech = Echelon(key=superlex_key, track=True)
        for idx, f in enumerate(elems):
            if not ech.insert(f.terms(), tag=idx):
                raise ArithmeticError("harmonic elements are dependent")
        chi = {}
        for mu, w in reps.items():
            if deadline is not None:
                deadline.check()
            trace = Fraction(0)
            for idx, f in enumerate(elems):
                trace += ech.solve(act(w, f).terms()).get(idx, 0)
            chi[mu] = trace
        entries[r, i] = frobenius_from_character(n, chi)
    return entries


def z_graded(table: BigradedTable) -> dict:
    """Set q = 1: {r: SymFuncVector}."""
    out = {}
    for r, row in enumerate(table.rows):
        acc = table.zero
        for v in row:
            acc = acc + v
        if acc:
            out[r] = acc
    return out


def rotate_dual(table: BigradedTable, N: int, M: int) -> BigradedTable:
    """q^N z^M table(1/q, 1/z), i.e. entry (r, i) -> (M - r, N - i)."""
    entries = {}
    for (r, i), v in table.entries().items():
        if r > M or i > N:
            raise ValueError("entry outside the duality window")
        entries[M - r, N - i] = v
    return BigradedTable.from_entries(entries, table.zero)


def omega_table(table: BigradedTable) -> BigradedTable:
    return BigradedTable([[basis_operator("omega", v) for v in row] for row in table.rows], table.zero)


# ----------------------------------------------------------------------
# hook expansion

def hook_expansion(n: int, k: int, s: int) -> dict:
    """{r: SymFuncVector} from products of hook Schur functions.

    Tuples of ``k`` nonempty hooks with ``n + k - s`` boxes; the first ``s``
    enter as s_la, the rest as s_{la/(1)}.  A tuple contributes to z^r where
    ``r`` is its total leg length, i.e. ``n + k - s - sum of first rows``.
    """
    _check(n, k, s)
    total = n + k - s
    layer = {(0, 0): SymFuncVector.schur(())}
    for pos in range(k):
        nxt: dict = {}
        for (size, legs), acc in layer.items():
            for m in range(1, total - size + 1):
                for la in hooks(m):
                    factor = SymFuncVector.schur(la) if pos < s else skew_by_box(la)
                    key = (size + m, legs + m - la[0])
                    prod = multiply(acc, factor)
                    nxt[key] = nxt[key] + prod if key in nxt else prod
        layer = nxt
    return {legs: v for (size, legs), v in layer.items() if size == total and v}


# ----------------------------------------------------------------------
# the h_j-perp recursion for C-functions

def _multichoose_qbinom(top: int, bottom: int) -> QPolynomial:
    """Gaussian binomial extended by [a-1 choose a] = [a == 0] at top = -1."""
    if bottom < 0:
        return QPolynomial()
    if top < 0:
        return ONE if bottom == 0 and top == -1 else QPolynomial()
    return qbinom(top, bottom)


def skewing_rhs(n: int, k: int, s: int, r: int, j: int) -> SymFuncVector:
    """Right side of the h_j-perp recursion for C-functions.

    ``a`` counts new unbarred entries below the bullets and ``j - a - b`` the
    new barred ones, so only the latter is bounded by ``r`` (through the
    superscript of the smaller C-function).
    """
    out = SymFuncVector(max(n - j, 0))
    for a in range(0, j + 1):
        for b in range(0, min(j, s) + 1):
            c = j - a - b
            if c < 0:
                continue
            coeff = (QPolynomial.monomial(c * (c - 1) // 2 + (s - b) * a)
                     * _multichoose_qbinom(k - s - 1 + a + b, a)
                     * qbinom(s, b)
                     * qbinom(k - s, c))
            if not coeff:
                continue
            term = schur_c_function(n - j, k, s - b, r - j + a + b)
            out = out + term * coeff
    return out


def skewing_lhs(n: int, k: int, s: int, r: int, j: int) -> SymFuncVector:
    return basis_operator("hperp", schur_c_function(n, k, s, r), j)


def duality_window(n: int, k: int) -> tuple:
    """(N, M) = top x-degree and top theta-degree of the k = s quotient."""
    return top_degree(n, k, k)
