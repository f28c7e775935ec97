"""Polynomials in a single formal variable q with rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


def _num(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else str(c)


class QPolynomial:
    """Immutable; ``coeffs[i]`` is the coefficient of ``q^i``, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, c=1) -> "QPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, x) -> "QPolynomial":
        return x if isinstance(x, QPolynomial) else cls([x])

    # -- basic protocol -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, q):
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = QPolynomial.coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other):
        return QPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self or not other:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = QPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: "QPolynomial") -> tuple:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return QPolynomial(quot), QPolynomial(rem)

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- graded manipulations -------------------------------------------
    def shift(self, d: int) -> "QPolynomial":
        """Multiply by q^d."""
        return QPolynomial([0] * d + list(self.coeffs)) if self else self

    def reverse(self, top: int) -> "QPolynomial":
        """``q^top * p(1/q)``; requires ``top >= degree``."""
        if self.degree > top:
            raise ValueError("degree exceeds reversal window")
        return QPolynomial(self[top - i] for i in range(top + 1))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_unimodal(self) -> bool:
        return is_unimodal(self.coeffs)

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = _num(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{_num(mag)}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"

    def to_json(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPolynomial":
        return cls(Fraction(c) for c in data)


def parse_qpoly(text: str) -> QPolynomial:
    """Inverse of ``str(QPolynomial)``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    out = QPolynomial()
    pos = 0
    term = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*)?(q(?:\^(\d+))?)?")
    while pos < len(text):
        m = term.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(4)):
            raise ValueError(f"cannot parse {text[pos:]!r}")
        if m.group(3) and not (m.group(2) and m.group(4)):
            raise ValueError(f"dangling '*' in {text!r}")
        c = Fraction(m.group(2) or 1)
        if m.group(1) == "-":
            c = -c
        deg = 0
        if m.group(4):
            deg = int(m.group(5) or 1)
        out = out + QPolynomial.monomial(deg, c)
        pos = m.end()
    return out


def is_unimodal(seq) -> bool:
    seq = list(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


ONE = QPolynomial([1])
ZERO = QPolynomial()


@lru_cache(maxsize=None)
def qint(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^{n-1}"""
    if n < 0:
        raise ValueError("negative q-integer")
    return QPolynomial([1] * n)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("negative q-factorial")
    out = ONE
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPolynomial:
    """Gaussian binomial; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError("negative argument to qbinom")
    if k > n:
        return ZERO
    return qfactorial(n) // (qfactorial(k) * qfactorial(n - k))
