"""Superspace Vandermondes, their annihilating generators and harmonic bases."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (SuperMonomial, SuperPolynomial, act, initial_term, odot,
                   permutations_of_first, superlex_key, young_symmetrize)
from .linalg import Echelon
from .osp import count_osp, is_substaircase, substaircase
from .words import Letter

P = SuperPolynomial


def _check_params(n, k, s):
    if not 0 <= s <= k:
        raise ValueError("need 0 <= s <= k")
    if n < 1 or s > n:
        raise ValueError("need n >= 1 and s <= n")


def top_degree(n: int, k: int, s: int) -> tuple:
    """(x-degree, theta-degree) of delta_{n,k,s}."""
    return (n - s) * (k - 1) + s * (s - 1) // 2, n - s


@lru_cache(maxsize=None)
def delta(n: int, k: int, s: int) -> SuperPolynomial:
    """Antisymmetrize ``x_1^{k-1}...x_{n-s}^{k-1} x_{n-s+1}^{s-1}...x_n^0 theta_1...theta_{n-s}``."""
    _check_params(n, k, s)
    xexp = [k - 1] * (n - s) + list(range(s - 1, -1, -1))
    seed = P.monomial(xexp, range(1, n - s + 1))
    return young_symmetrize("epsilon", n, seed)


# ----------------------------------------------------------------------
# ideal generators

def elementary(d: int, support, n: int) -> SuperPolynomial:
    """e_d in the variables ``x_i``, ``i`` in ``support``."""
    terms = {}
    for combo in itertools.combinations(sorted(support), d):
        xexp = [0] * n
        for i in combo:
            xexp[i - 1] = 1
        terms[SuperMonomial(tuple(xexp), 0)] = 1
    return P(n, terms)


def theta_word(indices, n: int) -> SuperPolynomial:
    return P.monomial((0,) * n, sorted(indices))


def euler_power(j: int, n: int) -> SuperPolynomial:
    """sum_i x_i^j theta_i"""
    out = P.zero(n)
    for i in range(1, n + 1):
        xexp = [0] * n
        xexp[i - 1] = j
        out = out + P.monomial(xexp, (i,))
    return out


@dataclass(frozen=True)
class IdealGenerators:
    n: int
    k: int
    s: int
    power_gens: tuple
    euler_gens: tuple
    elementary_gens: tuple

    def all(self) -> tuple:
        return self.power_gens + self.euler_gens + self.elementary_gens


def ideal_generators(n: int, k: int, s: int, degree_cap: int | None = None) -> IdealGenerators:
    """Generators of the annihilator ideal.

    The sums ``sum_i x_i^j theta_i`` are listed for ``k-s <= j <= degree_cap``
    (default ``k``); once ``j >= k`` each term is a multiple of ``x_i^k``.
    The elementary family lists ``e_d(S) theta_T`` for ``S + T = [n]`` and
    ``|S| - s < d <= |S|``, including ``d = 0`` when ``|S| < s``.
    """
    if not 0 <= s <= k:
        raise ValueError("need 0 <= s <= k")
    cap = k if degree_cap is None else degree_cap
    powers = []
    for i in range(1, n + 1):
        xexp = [0] * n
        xexp[i - 1] = k
        powers.append(P.monomial(xexp))
    eulers = tuple(euler_power(j, n) for j in range(max(k - s, 0), cap + 1))
    elems = []
    everything = range(1, n + 1)
    for size in range(n + 1):
        for S in itertools.combinations(everything, size):
            T = [i for i in everything if i not in S]
            for d in range(max(size - s + 1, 0), size + 1):
                elems.append(elementary(d, S, n) * theta_word(T, n))
    return IdealGenerators(n, k, s, tuple(powers), eulers, tuple(elems))


# ----------------------------------------------------------------------
# harmonic basis

@dataclass(frozen=True)
class HarmonicBasis:
    n: int
    k: int
    s: int
    elements: dict  # word -> SuperPolynomial

    def __len__(self) -> int:
        return len(self.elements)

    def bigraded_dims(self) -> list:
        """rows = theta-degree, columns = x-degree of each element"""
        counts: dict = {}
        for f in self.elements.values():
            (d,) = f.bidegrees()
            counts[d] = counts.get(d, 0) + 1
        return _table(counts)


def _table(counts: dict) -> list:
    if not counts:
        return []
    rows = max(j for _, j in counts) + 1
    cols = max(i for i, _ in counts) + 1
    return [[counts.get((i, j), 0) for i in range(cols)] for j in range(rows)]


def harmonic_basis(n: int, k: int, s: int, deadline=None) -> HarmonicBasis:
    """``{m (.) delta : m in SS_{n,k,s}}`` keyed by the exponent word of ``m``."""
    d = delta(n, k, s)
    out = {}
    for word in substaircase(n, k, s):
        if deadline is not None:
            deadline.check()
        f = odot(P(n, {SuperMonomial.from_word(word): 1}), d)
        if not f:
            raise ArithmeticError(f"harmonic element for {word} vanished")
        out[word] = f
    return HarmonicBasis(n, k, s, out)


def independence_rank(polys) -> int:
    """Exact rank of a family of superpolynomials (superlex-keyed elimination)."""
    ech = Echelon(key=superlex_key)
    for f in polys:
        ech.insert(f.terms())
    return ech.rank


# ----------------------------------------------------------------------
# the involution on substaircase words

@dataclass(frozen=True)
class InvolutionResult:
    word: tuple        # iota(m)
    staircase: tuple   # U, built from m
    certificate: tuple  # v, a staircase dominating iota(m)


def involution(word, n: int, k: int, s: int) -> InvolutionResult:
    """Exponent word of the superlex-initial term of ``m (.) delta_{n,k,s}``.

    Computed letter by letter without touching polynomials.
    """
    word = tuple(word)
    if not is_substaircase(word, n, k, s):
        raise ValueError("word is not a substaircase word")
    level = s
    stair = []
    for c in word:
        if c.barred or c.value >= level:
            stair.append(Letter(k - 1, True))
        else:
            level -= 1
            stair.append(Letter(level))
    result = []
    for c, big in zip(word, stair):
        if big.barred:
            # barred minus barred cancels the theta; barred minus unbarred keeps it
            result.append(Letter(big.value - c.value, not c.barred))
        else:
            result.append(Letter(big.value - c.value))
    level = s
    cert = []
    for c, big in zip(word, stair):
        if c.barred and big.barred:
            cert.append(Letter(k - 1))
        elif not big.barred:
            level -= 1
            cert.append(Letter(level))
        else:
            # the one barred letter a staircase allows after the unbarred
            # letters s-1, ..., level already placed
            cert.append(Letter(k - level - 1, True))
    return InvolutionResult(tuple(result), tuple(stair), tuple(cert))


def involution_brute(word, n: int, k: int, s: int) -> tuple:
    """``(word of in(m (.) delta), its coefficient)`` by direct expansion."""
    f = odot(P(n, {SuperMonomial.from_word(word): 1}), delta(n, k, s))
    m = initial_term(f)
    return m.word(), f.coefficient(m)


# ----------------------------------------------------------------------
# slices of theta-degree n-k: the A and B submodules

def _monomials(n: int, degree: int):
    for combo in itertools.combinations_with_replacement(range(n), degree):
        xexp = [0] * n
        for i in combo:
            xexp[i] += 1
        yield tuple(xexp)


def _submodule_generators(n: int, k: int, family: str) -> list:
    t = n - k
    everything = range(1, n + 1)
    gens = []
    for T in itertools.combinations(everything, t):
        S = [i for i in everything if i not in T]
        th = theta_word(T, n)
        if family == "A":
            gens += [elementary(j, everything, n) * th for j in range(1, n + 1)]
        else:
            gens += [elementary(j, S, n) * th for j in range(1, len(S) + 1)]
            for i in everything:
                xexp = [0] * n
                xexp[i - 1] = k
                gens.append(P.monomial(xexp) * th)
    if t >= 1:
        for T in itertools.combinations(everything, t - 1):
            th = theta_word(T, n)
            for j in range(1, n + 1):
                gens.append(euler_power(j - 1, n).scale(j) * th)
    return [g for g in gens if g]


class SliceFiltration:
    """Degree-by-degree spans of a Q[x]-submodule of fixed theta-degree."""

    def __init__(self, n: int, gens):
        self.n = n
        self.by_degree: dict = {}
        for g in gens:
            (deg,) = {d for d, _ in g.bidegrees()}
            self.by_degree.setdefault(deg, []).append(g)
        self.previous: list = []
        self.degree = -1

    def next_slice(self) -> Echelon:
        self.degree += 1
        ech = Echelon(key=superlex_key)
        x_vars = [P.x(i, self.n) for i in range(1, self.n + 1)]
        for row in self.previous:
            for xv in x_vars:
                ech.insert((xv * row).terms())
        for g in self.by_degree.get(self.degree, ()):
            ech.insert(g.terms())
        self.previous = [P(self.n, row) for row in ech.rows.values()]
        return ech


def ambient_slice_dim(n: int, theta_degree: int, x_degree: int) -> int:
    return math.comb(n, theta_degree) * math.comb(x_degree + n - 1, n - 1)


def coinvariant_slice_quotients(n: int, k: int) -> tuple:
    """Graded dimensions of ``Omega^{(n-k)}/A`` and ``Omega^{(n-k)}/B``.

    The B side runs over x-degrees ``0..N``.  The A side stops at the first
    zero slice: once a slice is all of the ambient space, multiplying by the
    ``x_i`` fills every later slice too.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    t = n - k
    top = t * (k - 1) + k * (k - 1) // 2
    out = []
    for family in ("A", "B"):
        filt = SliceFiltration(n, _submodule_generators(n, k, family))
        dims = []
        while True:
            ech = filt.next_slice()
            dim = ambient_slice_dim(n, t, filt.degree) - ech.rank
            dims.append(dim)
            if family == "B" and filt.degree >= top:
                break
            if family == "A" and (dim == 0 or filt.degree >= top + n * k):
                break
        while len(dims) > 1 and dims[-1] == 0:
            dims.pop()
        out.append([dims])
    return tuple(out)


def slice_character(n: int, k: int, family: str, w, max_degree: int) -> list:
    """Traces of ``w`` on the quotient slices of theta-degree ``n-k``, degrees ``0..max_degree``."""
    t = n - k
    filt = SliceFiltration(n, _submodule_generators(n, k, family))
    traces = []
    for _ in range(max_degree + 1):
        ech = filt.next_slice()
        d = filt.degree
        ambient = Fraction(0)
        for xexp in _monomials(n, d):
            for T in itertools.combinations(range(1, n + 1), t):
                m = SuperMonomial.make(xexp, T)
                ambient += act(w, P(n, {m: 1})).coefficient(m)
        sub = Fraction(0)
        for lead, row in ech.rows.items():
            image = act(w, P(n, row))
            residue, coords, _ = ech.reduce(image.terms())
            if residue:
                raise ArithmeticError("submodule slice is not stable under the group")
            sub += coords.get(lead, 0)
        traces.append(ambient - sub)
    return traces


def expected_basis_size(n: int, k: int, s: int) -> int:
    return count_osp(n, k, s)


__all__ = [
    "delta", "ideal_generators", "IdealGenerators", "harmonic_basis", "HarmonicBasis",
    "involution", "involution_brute", "InvolutionResult", "coinvariant_slice_quotients",
    "slice_character", "independence_rank", "top_degree", "permutations_of_first",
]
