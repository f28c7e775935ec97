"""Symmetric and quasisymmetric functions with q-polynomial coefficients.

Schur expansions are dicts keyed by partitions (weakly decreasing tuples);
fundamental quasisymmetric expansions are keyed by frozensets ``S`` of
``{1..n-1}``.  Products and the characteristic map go through explicit
polynomials in as many variables as the degree, which is a faithful model
in that degree.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .linalg import Echelon
from .qpoly import ONE, QPolynomial, parse_qpoly


class NotSymmetricError(ValueError):
    """An expansion was requested for something outside the symmetric span."""


# ----------------------------------------------------------------------
# partitions and tableaux

@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return tuple(out)


def conjugate(la) -> tuple:
    la = tuple(la)
    return tuple(sum(1 for part in la if part > i) for i in range(la[0])) if la else ()


def is_hook(la) -> bool:
    return len(la) == 0 or all(p == 1 for p in la[1:])


def hooks(size: int) -> list:
    """Hook shapes ``(a, 1^{size-a})`` with ``a = size..1``."""
    return [(a,) + (1,) * (size - a) for a in range(size, 0, -1)]


def _corners(la):
    for i, part in enumerate(la):
        if i + 1 == len(la) or la[i + 1] < part:
            yield i


@lru_cache(maxsize=None)
def standard_tableaux_rows(la: tuple) -> tuple:
    """Each SYT of shape ``la`` as the row index of entries ``1..n``."""
    n = sum(la)
    if n == 0:
        return ((),)
    out = []
    for i in _corners(la):
        smaller = list(la)
        smaller[i] -= 1
        if not smaller[i]:
            smaller.pop()
        for rows in standard_tableaux_rows(tuple(smaller)):
            out.append(rows + (i,))
    return tuple(out)


def descent_set(rows) -> frozenset:
    """Des(T) = {i : i+1 sits in a strictly lower row than i}."""
    return frozenset(i for i in range(1, len(rows)) if rows[i] > rows[i - 1])


def num_syt(la) -> int:
    """Hook length formula."""
    la = tuple(la)
    n = sum(la)
    conj = conjugate(la)
    prod = 1
    for i, part in enumerate(la):
        for j in range(part):
            prod *= part - j + conj[j] - i - 1
    return math.factorial(n) // prod


@lru_cache(maxsize=None)
def schur_to_fundamental(la: tuple) -> dict:
    return dict(Counter(descent_set(rows) for rows in standard_tableaux_rows(la)))


# ----------------------------------------------------------------------
# vector types

def _clean(coeffs: Mapping) -> dict:
    out = {}
    for key, c in coeffs.items():
        c = QPolynomial.coerce(c)
        if c:
            out[key] = c
    return out


class _Vector:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping | None = None):
        self.n = n
        self.coeffs = _clean(coeffs or {})

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        if self.coeffs and other.coeffs and self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, QPolynomial()) + (c if sign > 0 else -c)
        n = self.n if self.coeffs else other.n
        return type(self)(n, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)(self.n, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, QPolynomial)):
            return type(self)(self.n, {k: v * c for k, v in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, key) -> QPolynomial:
        return self.coeffs.get(key, QPolynomial())

    def items(self):
        return self.coeffs.items()

    def q_degree(self) -> int:
        return max((c.degree for c in self.coeffs.values()), default=-1)

    def q_coefficient(self, i: int):
        """The q^i slice, with constant coefficients."""
        return type(self)(self.n, {k: c[i] for k, c in self.coeffs.items()})

    def at_q(self, q):
        return type(self)(self.n, {k: c(q) for k, c in self.coeffs.items()})


class QSymVector(_Vector):
    """Sum of ``c_S(q) F_{S,n}``."""

    @classmethod
    def fundamental(cls, subset: Iterable[int], n: int) -> "QSymVector":
        return cls(n, {frozenset(subset): ONE})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        keys = sorted(self.coeffs, key=lambda S: (len(S), sorted(S)))
        return _format_terms((self.coeffs[S], "F[" + ",".join(map(str, sorted(S))) + "]") for S in keys)

    __repr__ = __str__


class SymFuncVector(_Vector):
    """Sum of ``c_la(q) s_la`` over partitions ``la`` of ``n``."""

    @classmethod
    def schur(cls, la, c=1) -> "SymFuncVector":
        la = tuple(la)
        return cls(sum(la), {la: c})

    @classmethod
    def h(cls, j: int) -> "SymFuncVector":
        return cls.schur((j,) if j else ())

    @classmethod
    def e(cls, j: int) -> "SymFuncVector":
        return cls.schur((1,) * j)

    def dimension(self) -> QPolynomial:
        """Specialize every s_la to the number of SYT of shape la."""
        out = QPolynomial()
        for la, c in self.coeffs.items():
            out = out + c * num_syt(la)
        return out

    def hperp(self, j: int) -> "SymFuncVector":
        return basis_operator("hperp", self, j)

    def eperp(self, j: int) -> "SymFuncVector":
        return basis_operator("eperp", self, j)

    def omega(self) -> "SymFuncVector":
        return basis_operator("omega", self)

    def to_fundamental(self) -> QSymVector:
        out: dict = {}
        for la, c in self.coeffs.items():
            for S, mult in schur_to_fundamental(la).items():
                out[S] = out.get(S, QPolynomial()) + c * mult
        return QSymVector(self.n, out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        keys = sorted(self.coeffs, reverse=True)
        return _format_terms((self.coeffs[la], "s[" + ",".join(map(str, la)) + "]") for la in keys)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"partition": list(la), "coeff": self.coeffs[la].to_json()}
                for la in sorted(self.coeffs, reverse=True)]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "SymFuncVector":
        coeffs = {tuple(d["partition"]): QPolynomial.from_json(d["coeff"]) for d in data}
        if n is None:
            n = sum(next(iter(coeffs))) if coeffs else 0
        return cls(n, coeffs)


def _format_terms(pairs) -> str:
    pieces = []
    for c, basis in pairs:
        neg = False
        if len([x for x in c.coeffs if x]) == 1:
            lead = c.coeffs[-1]
            neg = lead < 0
            mag = -c if neg else c
            body = basis if mag == ONE else f"{mag}*{basis}"
        else:
            body = f"({c})*{basis}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


_SYM_TERM = re.compile(r"^(-)?(?:\((?P<paren>[^()]*)\)\*|(?P<plain>[^()*]+(?:\*q(?:\^\d+)?)?)\*)?s\[(?P<la>[\d,]*)\]$")


def parse_symfunc(text: str, n: int | None = None) -> SymFuncVector:
    """Inverse of ``str(SymFuncVector)``."""
    text = text.strip()
    if text == "0":
        return SymFuncVector(n or 0)
    pieces = re.split(r" ([+-]) ", text)
    terms = [pieces[0]] + [("-" if sign == "-" else "") + body
                           for sign, body in zip(pieces[1::2], pieces[2::2])]
    coeffs: dict = {}
    for term in terms:
        m = _SYM_TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        raw = m.group("paren") or m.group("plain")
        c = parse_qpoly(raw) if raw else ONE
        if m.group(1):
            c = -c
        la = tuple(int(p) for p in m.group("la").split(",") if p)
        if list(la) != sorted(la, reverse=True):
            raise ValueError(f"not a partition: {la}")
        coeffs[la] = coeffs.get(la, QPolynomial()) + c
    degrees = {sum(la) for la in coeffs}
    if len(degrees) > 1:
        raise ValueError("inhomogeneous expansion")
    return SymFuncVector(degrees.pop(), coeffs)


# ----------------------------------------------------------------------
# fundamental -> Schur

@lru_cache(maxsize=None)
def _schur_system(n: int) -> Echelon:
    ech = Echelon(key=lambda S: (len(S), tuple(sorted(S))), track=True)
    for la in partitions(n):
        ech.insert(schur_to_fundamental(la), tag=la)
    return ech


def fundamental_to_schur(v: QSymVector) -> SymFuncVector:
    """Schur expansion of a quasisymmetric vector; NotSymmetricError if there is none."""
    n = v.n
    if not v:
        return SymFuncVector(n)
    ech = _schur_system(n)
    out: dict = {}
    for i in range(v.q_degree() + 1):
        slice_ = {S: c[i] for S, c in v.coeffs.items() if c[i]}
        if not slice_:
            continue
        try:
            sol = ech.solve(slice_)
        except ValueError:
            raise NotSymmetricError("not symmetric: outside the Schur span") from None
        for la, c in sol.items():
            out[la] = out.get(la, QPolynomial()) + QPolynomial.monomial(i, c)
    return SymFuncVector(n, out)


# ----------------------------------------------------------------------
# skewing operators and omega

def horizontal_strips(la: tuple, j: int):
    """Partitions mu with la/mu a horizontal strip of size j."""
    la = tuple(la)
    length = len(la)

    def rec(i, left, acc):
        if i == length:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        low = la[i + 1] if i + 1 < length else 0
        for mu_i in range(la[i], low - 1, -1):
            take = la[i] - mu_i
            if take > left:
                break
            yield from rec(i + 1, left - take, acc + [mu_i])

    yield from rec(0, j, [])


def vertical_strips(la: tuple, j: int):
    for mu in horizontal_strips(conjugate(la), j):
        yield conjugate(mu)


def basis_operator(op: str, v: SymFuncVector, j: int = 0) -> SymFuncVector:
    """``hperp``/``eperp`` remove horizontal/vertical strips of size ``j``; ``omega`` conjugates."""
    out: dict = {}
    if op == "omega":
        return SymFuncVector(v.n, {conjugate(la): c for la, c in v.coeffs.items()})
    if op == "hperp":
        strips = horizontal_strips
    elif op == "eperp":
        strips = vertical_strips
    else:
        raise ValueError(f"unknown operator {op!r}")
    if j < 0:
        raise ValueError("negative strip size")
    for la, c in v.coeffs.items():
        for mu in strips(la, j):
            out[mu] = out.get(mu, QPolynomial()) + c
    return SymFuncVector(max(v.n - j, 0), out)


def hall_inner(f: SymFuncVector, g: SymFuncVector) -> QPolynomial:
    out = QPolynomial()
    for la, c in f.coeffs.items():
        if la in g.coeffs:
            out = out + c * g.coeffs[la]
    return out


# ----------------------------------------------------------------------
# explicit polynomials in N variables: dict exponent tuple -> coefficient

def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def monomial_symmetric(mu: tuple, nvars: int) -> dict:
    if len(mu) > nvars:
        return {}
    padded = tuple(mu) + (0,) * (nvars - len(mu))
    return {e: 1 for e in set(itertools.permutations(padded))}


@lru_cache(maxsize=None)
def kostka(la: tuple, mu: tuple) -> int:
    """Number of SSYT of shape la and content mu (trailing content peeled as a strip)."""
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1 if not la else 0
    last = mu[-1]
    return sum(kostka(nu, mu[:-1]) for nu in horizontal_strips(la, last))


@lru_cache(maxsize=None)
def schur_polynomial(la: tuple, nvars: int) -> dict:
    la = tuple(la)
    out: dict = {}
    if len(la) > nvars:
        return out
    for mu in partitions(sum(la)):
        if len(mu) > nvars:
            continue
        K = kostka(la, mu)
        if K:
            for e in monomial_symmetric(mu, nvars):
                out[e] = K
    return out


def poly_to_schur(p: Mapping, nvars: int) -> SymFuncVector:
    """Schur expansion of a homogeneous symmetric polynomial in ``nvars`` variables.

    Coefficients may be rationals or QPolynomials.  Peels the
    lexicographically leading exponent, which must be a partition.
    """
    rest = {e: QPolynomial.coerce(c) for e, c in p.items() if c}
    if not rest:
        return SymFuncVector(0)
    degrees = {sum(e) for e in rest}
    if len(degrees) != 1:
        raise NotSymmetricError("not symmetric: inhomogeneous polynomial")
    n = degrees.pop()
    if n > nvars:
        raise ValueError(f"degree {n} exceeds the {nvars} available variables")
    out: dict = {}
    while rest:
        lead = max(rest)
        if list(lead) != sorted(lead, reverse=True):
            raise NotSymmetricError("not symmetric: leading exponent is not a partition")
        la = tuple(x for x in lead if x)
        c = rest[lead]
        out[la] = c
        for e, K in schur_polynomial(la, nvars).items():
            v = rest.get(e, QPolynomial()) - c * K
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return SymFuncVector(n, out)


def symfunc_to_poly(v: SymFuncVector, nvars: int) -> dict:
    out: dict = {}
    for la, c in v.coeffs.items():
        for e, K in schur_polynomial(la, nvars).items():
            out[e] = out.get(e, QPolynomial()) + c * K
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def schur_times(la: tuple, mu: tuple) -> SymFuncVector:
    """s_la * s_mu by multiplying Schur polynomials in |la|+|mu| variables."""
    N = sum(la) + sum(mu)
    if N == 0:
        return SymFuncVector.schur(())
    prod = _poly_mul(schur_polynomial(la, N), schur_polynomial(mu, N))
    return poly_to_schur(prod, N)


def multiply(*factors: SymFuncVector) -> SymFuncVector:
    out = SymFuncVector.schur(())
    for f in factors:
        acc: dict = {}
        for la, c in out.coeffs.items():
            for mu, d in f.coeffs.items():
                for nu, e in schur_times(la, mu).coeffs.items():
                    acc[nu] = acc.get(nu, QPolynomial()) + c * d * e
        out = SymFuncVector(out.n + f.n, acc)
    return out


def skew_by_box(la: tuple) -> SymFuncVector:
    """s_{la/(1)} as a sum of straight shapes (remove one corner)."""
    return basis_operator("hperp", SymFuncVector.schur(la), 1)


# ----------------------------------------------------------------------
# characteristic map

def centralizer_size(mu: tuple) -> int:
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * math.factorial(mult)
    return out


def power_sum(mu: tuple, nvars: int) -> dict:
    out = {(0,) * nvars: 1}
    for part in mu:
        p = {}
        for i in range(nvars):
            e = [0] * nvars
            e[i] = part
            p[tuple(e)] = 1
        out = _poly_mul(out, p)
    return out


def frobenius_from_character(n: int, chi: Mapping) -> SymFuncVector:
    """``sum_mu chi(mu) p_mu / z_mu`` in the Schur basis."""
    total: dict = {}
    for mu in partitions(n):
        if mu not in chi:
            raise KeyError(f"character missing cycle type {mu}")
        c = Fraction(chi[mu]) / centralizer_size(mu)
        if not c:
            continue
        for e, v in power_sum(mu, n).items():
            total[e] = total.get(e, 0) + c * v
    total = {e: c for e, c in total.items() if c}
    if not total:
        return SymFuncVector(n)
    return poly_to_schur(total, n)
