"""Exact arithmetic in superspace.

Elements live in ``Q[x_1..x_n] (x) Lambda[theta_1..theta_n]``.  Coefficients are
``Fraction``s; theta-words are stored as bitmasks (bit ``i-1`` for ``theta_i``)
in ascending index order, so every sign produced by anticommutation is
accounted for at construction time.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .words import Letter, word_key


def _bits(mask: int) -> Iterator[int]:
    """Yield the 0-based positions of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _mask_of(thetas: Iterable[int]) -> int:
    mask = 0
    for i in thetas:
        mask |= 1 << (i - 1)
    return mask


def wedge_sign(left: int, right: int) -> int:
    """Sign of reordering ``theta_left * theta_right`` into ascending order.

    Returns 0 when the two words share an index.
    """
    if left & right:
        return 0
    swaps = 0
    for b in _bits(right):
        swaps += _popcount(left >> (b + 1))
    return -1 if swaps & 1 else 1


def contraction_sign(ops: int, word: int) -> int:
    """Sign of ``d_{i_1} d_{i_2} ... d_{i_r}`` applied to ``theta_word``.

    ``ops`` lists ``i_1 < ... < i_r`` and the rightmost operator acts first.
    Each ``d_i`` removes ``theta_i`` with sign ``(-1)^(#indices below i)``;
    larger indices leave first, so the count below ``i_t`` is read off the
    original word.  Returns 0 unless ``ops`` is contained in ``word``.
    """
    if ops & ~word:
        return 0
    swaps = 0
    for b in _bits(ops):
        swaps += _popcount(word & ((1 << b) - 1))
    return -1 if swaps & 1 else 1


class SuperMonomial(NamedTuple):
    """``x^xexp * theta_I`` with ``I`` given by the bitmask ``mask``."""

    xexp: tuple
    mask: int = 0

    @classmethod
    def make(cls, xexp: Iterable[int], thetas: Iterable[int] = ()) -> "SuperMonomial":
        xexp = tuple(xexp)
        thetas = tuple(thetas)
        if any(e < 0 for e in xexp):
            raise ValueError("negative exponent")
        if len(set(thetas)) != len(thetas):
            raise ValueError("repeated theta index; use SuperPolynomial for signed products")
        if any(not 1 <= i <= len(xexp) for i in thetas):
            raise ValueError("theta index out of range")
        return cls(xexp, _mask_of(thetas))

    @property
    def n(self) -> int:
        return len(self.xexp)

    @property
    def thetas(self) -> tuple:
        return tuple(b + 1 for b in _bits(self.mask))

    @property
    def x_degree(self) -> int:
        return sum(self.xexp)

    @property
    def theta_degree(self) -> int:
        return _popcount(self.mask)

    def word(self) -> tuple:
        """Exponent word: position i is barred iff theta_i occurs."""
        return tuple(Letter(e, bool(self.mask >> i & 1)) for i, e in enumerate(self.xexp))

    @classmethod
    def from_word(cls, word: Iterable[Letter]) -> "SuperMonomial":
        word = tuple(word)
        mask = 0
        for i, c in enumerate(word):
            if c.barred:
                mask |= 1 << i
        return cls(tuple(c.value for c in word), mask)

    def __str__(self) -> str:
        return _format_monomial(self) or "1"


def superlex_key(m: SuperMonomial) -> tuple:
    return word_key(m.word())


def _format_monomial(m: SuperMonomial) -> str:
    parts = []
    if any(m.xexp):
        parts.append("x^(" + ",".join(map(str, m.xexp)) + ")")
    if m.mask:
        parts.append("t{" + ",".join(map(str, m.thetas)) + "}")
    return "*".join(parts)


class SuperPolynomial:
    """A finitely supported map from monomials of rank ``n`` to nonzero rationals.

    Treat instances as immutable; every operation returns a new object.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[SuperMonomial, object] | None = None):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m.xexp) != n:
                    raise ValueError("monomial rank mismatch")
                c = Fraction(c)
                if c:
                    clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SuperPolynomial":
        # trusted constructor: terms already normalised, zeros removed
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "SuperPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c, n: int) -> "SuperPolynomial":
        return cls(n, {SuperMonomial((0,) * n, 0): c})

    @classmethod
    def monomial(cls, xexp: Iterable[int], thetas: Iterable[int] = (), coeff=1) -> "SuperPolynomial":
        """``coeff * x^xexp * theta_{t_1} ... theta_{t_r}`` in the order given."""
        xexp = tuple(xexp)
        n = len(xexp)
        thetas = list(thetas)
        if any(not 1 <= i <= n for i in thetas):
            raise ValueError("theta index out of range")
        if len(set(thetas)) != len(thetas):
            return cls.zero(n)
        sign = _permutation_sign(thetas)
        return cls(n, {SuperMonomial(xexp, _mask_of(thetas)): sign * Fraction(coeff)})

    @classmethod
    def x(cls, i: int, n: int) -> "SuperPolynomial":
        _check_index(i, n)
        return cls.monomial(tuple(int(j == i) for j in range(1, n + 1)))

    @classmethod
    def theta(cls, i: int, n: int) -> "SuperPolynomial":
        _check_index(i, n)
        return cls.monomial((0,) * n, (i,))

    # -- container protocol ---------------------------------------------
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: SuperMonomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SuperPolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SuperPolynomial.constant(other, self.n)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "SuperPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial.constant(other, self.n)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SuperPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        if not c:
            return SuperPolynomial.zero(self.n)
        return SuperPolynomial._raw(self.n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- gradings -------------------------------------------------------
    def bidegrees(self) -> set:
        return {(m.x_degree, m.theta_degree) for m in self._terms}

    def component(self, x_degree: int, theta_degree: int) -> "SuperPolynomial":
        return SuperPolynomial._raw(self.n, {
            m: c for m, c in self._terms.items()
            if m.x_degree == x_degree and m.theta_degree == theta_degree})

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    # -- text -----------------------------------------------------------
    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: superlex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self.n}, {format_poly(self)!r})"


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")


def _permutation_sign(seq) -> int:
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv & 1 else 1


# ----------------------------------------------------------------------
# ring operations

def poly_mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    f._check(g)
    out: dict = {}
    for mf, cf in f._terms.items():
        for mg, cg in g._terms.items():
            sign = wedge_sign(mf.mask, mg.mask)
            if not sign:
                continue
            key = SuperMonomial(tuple(a + b for a, b in zip(mf.xexp, mg.xexp)), mf.mask | mg.mask)
            v = out.get(key, 0) + sign * cf * cg
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SuperPolynomial._raw(f.n, out)


def derive(kind: str, i: int, f: SuperPolynomial) -> SuperPolynomial:
    """Partial derivative in ``x_i`` (``kind='x'``) or ``theta_i`` (``kind='theta'``)."""
    _check_index(i, f.n)
    out = {}
    if kind == "x":
        for m, c in f._terms.items():
            e = m.xexp[i - 1]
            if e:
                xexp = m.xexp[:i - 1] + (e - 1,) + m.xexp[i:]
                out[SuperMonomial(xexp, m.mask)] = c * e
    elif kind == "theta":
        bit = 1 << (i - 1)
        for m, c in f._terms.items():
            if m.mask & bit:
                sign = -1 if _popcount(m.mask & (bit - 1)) & 1 else 1
                out[SuperMonomial(m.xexp, m.mask ^ bit)] = sign * c
    else:
        raise ValueError(f"unknown derivative kind {kind!r}")
    return SuperPolynomial._raw(f.n, out)


def odot(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    """Apply ``f`` to ``g`` as a differential operator.

    ``x_i`` becomes ``d/dx_i`` and ``theta_i`` becomes ``d/dtheta_i``; the
    theta-word ``theta_{i_1}...theta_{i_r}`` becomes the composite
    ``d_{i_1} o ... o d_{i_r}``, so ``odot(f*g, h) == odot(f, odot(g, h))``.
    """
    f._check(g)
    out: dict = {}
    for mg, cg in g._terms.items():
        gx, gmask = mg.xexp, mg.mask
        for mf, cf in f._terms.items():
            fmask = mf.mask
            sign = contraction_sign(fmask, gmask)
            if not sign:
                continue
            fx = mf.xexp
            coeff = sign * cf * cg
            ok = True
            for a, b in zip(fx, gx):
                if a > b:
                    ok = False
                    break
                if a:
                    coeff *= math.perm(b, a)
            if not ok:
                continue
            key = SuperMonomial(tuple(b - a for a, b in zip(fx, gx)), gmask ^ fmask)
            v = out.get(key, 0) + coeff
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SuperPolynomial._raw(f.n, out)


# ----------------------------------------------------------------------
# permutations

class Permutation(tuple):
    """One-line notation ``(w(1), ..., w(n))``; composition ``(u*v)(i) = u(v(i))``."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, w in enumerate(self, 1):
            inv[w - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        return _permutation_sign(self)

    def cycle_type(self) -> tuple:
        seen = [False] * len(self)
        lengths = []
        for start in range(len(self)):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = self[j] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def act(w: Permutation, f: SuperPolynomial) -> SuperPolynomial:
    """``w . x_i = x_{w(i)}`` and ``w . theta_i = theta_{w(i)}``."""
    if len(w) != f.n:
        raise ValueError("rank mismatch")
    n = f.n
    out = {}
    for m, c in f._terms.items():
        xexp = [0] * n
        for i, e in enumerate(m.xexp):
            xexp[w[i] - 1] = e
        images = [w[b] for b in _bits(m.mask)]
        out[SuperMonomial(tuple(xexp), _mask_of(images))] = _permutation_sign(images) * c
    return SuperPolynomial._raw(n, out)


def permutations_of_first(j: int, n: int) -> Iterator[Permutation]:
    """All of ``S_j`` embedded in ``S_n`` (fixing ``j+1..n``)."""
    tail = tuple(range(j + 1, n + 1))
    for p in itertools.permutations(range(1, j + 1)):
        yield Permutation(p + tail)


def young_symmetrize(kind: str, j: int, f: SuperPolynomial) -> SuperPolynomial:
    """Signed (``epsilon``) or plain (``eta``) sum of ``w.f`` over ``w`` in ``S_j``."""
    if kind not in ("epsilon", "eta"):
        raise ValueError(f"unknown symmetrizer {kind!r}")
    if not 0 <= j <= f.n:
        raise ValueError(f"j={j} exceeds rank {f.n}")
    out: dict = {}
    for w in permutations_of_first(j, f.n):
        sign = w.sign() if kind == "epsilon" else 1
        for m, c in act(w, f)._terms.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return SuperPolynomial._raw(f.n, out)


def initial_term(f: SuperPolynomial) -> SuperMonomial:
    if not f:
        raise ValueError("zero polynomial has no initial term")
    return max(f._terms, key=superlex_key)


def leading(f: SuperPolynomial) -> tuple:
    """``(initial monomial, its coefficient)``."""
    m = initial_term(f)
    return m, f._terms[m]


# ----------------------------------------------------------------------
# text form: terms by descending superlex, e.g. -18*x^(0,0,3,2,3)*t{4,5}

def format_poly(f: SuperPolynomial) -> str:
    if not f:
        return "0"
    pieces = []
    for m, c in f.sorted_terms():
        body = _format_monomial(m)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + text)
        else:
            pieces.append((" - " if c < 0 else " + ") + text)
    return "".join(pieces)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)(?:\*|(?=\s*(?:[+-]|$))))?
        (?:x\^\((?P<x>[\d,\s]*)\))?\*?
        (?:t\{(?P<t>[\d,\s]*)\})?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, n: int | None = None) -> SuperPolynomial:
    """Parse the canonical text form.  ``n`` is required when no term has an x part."""
    text = text.strip()
    if text == "0":
        if n is None:
            raise ValueError("rank needed to parse the zero polynomial")
        return SuperPolynomial.zero(n)
    raw = []
    pos = 0
    first = True
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        if not first and not mt.group("sign"):
            raise ValueError(f"missing sign near {text[pos:]!r}")
        if not (mt.group("coef") or mt.group("x") is not None or mt.group("t") is not None):
            raise ValueError(f"empty term near {text[pos:]!r}")
        first = False
        coef = Fraction(mt.group("coef") or 1)
        if mt.group("sign") == "-":
            coef = -coef
        xexp = None
        if mt.group("x") is not None:
            xexp = tuple(int(v) for v in mt.group("x").split(",") if v.strip())
        thetas = ()
        if mt.group("t") is not None:
            thetas = tuple(int(v) for v in mt.group("t").split(",") if v.strip())
        raw.append((coef, xexp, thetas))
        pos = mt.end()
    ranks = {len(x) for _, x, _ in raw if x is not None}
    if n is None:
        if len(ranks) != 1:
            raise ValueError("cannot infer rank; pass n")
        n = ranks.pop()
    elif ranks - {n}:
        raise ValueError("rank mismatch in text")
    out = SuperPolynomial.zero(n)
    for coef, xexp, thetas in raw:
        out = out + SuperPolynomial.monomial(xexp if xexp is not None else (0,) * n, thetas, coef)
    return out
