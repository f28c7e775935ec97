"""Ordered set superpartitions and their statistics.

An ordered set superpartition of type ``(n, k, s)`` is a sequence of ``k``
blocks partitioning ``{1..n}`` whose first ``s`` blocks are nonempty with
unbarred minima; any other element may carry a bar.  Elements are stored as
:class:`~superspace.words.Letter` pairs ``(value, barred)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .words import Letter, bar_count


@dataclass(frozen=True)
class OrderedSetSuperpartition:
    n: int
    k: int
    s: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(Letter(int(v), bool(b)) for v, b in blk)) for blk in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.k < self.s or self.s < 0:
            raise ValueError("need 0 <= s <= k")
        if len(blocks) != self.k:
            raise ValueError(f"expected {self.k} blocks, got {len(blocks)}")
        values = sorted(c.value for blk in blocks for c in blk)
        if values != list(range(1, self.n + 1)):
            raise ValueError("blocks do not partition 1..n")
        for i, blk in enumerate(blocks[:self.s], 1):
            if not blk:
                raise ValueError(f"block {i} must be nonempty")
            if blk[0].barred:
                raise ValueError(f"minimum of block {i} must be unbarred")

    @property
    def r(self) -> int:
        return sum(bar_count(blk) for blk in self.blocks)

    def mins(self) -> list:
        return [blk[0].value if blk else None for blk in self.blocks]

    def block_of(self) -> dict:
        """value -> (block index from 1, barred)"""
        return {c.value: (i, c.barred) for i, blk in enumerate(self.blocks, 1) for c in blk}

    def __str__(self) -> str:
        return format_osp(self)

    def to_json(self) -> list:
        return [[{"v": c.value, "barred": c.barred} for c in blk] for blk in self.blocks]

    @classmethod
    def from_json(cls, data, s: int) -> "OrderedSetSuperpartition":
        if isinstance(data, str):
            data = json.loads(data)
        blocks = [[(d["v"], d["barred"]) for d in blk] for blk in data]
        n = sum(len(b) for b in blocks)
        return cls(n, len(blocks), s, blocks)


def format_osp(sigma: OrderedSetSuperpartition) -> str:
    return "(" + "|".join(",".join(str(c) for c in blk) for blk in sigma.blocks) + ")"


def parse_osp(text: str, s: int) -> OrderedSetSuperpartition:
    """Parse ``(5,7|1|3,~4,~8||~2,6)``; ``s`` is not recoverable from the text."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("expected parenthesised blocks")
    blocks = []
    for seg in text[1:-1].split("|"):
        blk = []
        for tok in filter(None, (t.strip() for t in seg.split(","))):
            barred = tok.startswith("~")
            blk.append((int(tok[1:] if barred else tok), barred))
        blocks.append(blk)
    n = sum(len(b) for b in blocks)
    return OrderedSetSuperpartition(n, len(blocks), s, blocks)


# ----------------------------------------------------------------------
# enumeration and counting

def enumerate_osp(n: int, k: int, s: int, r: int | None = None) -> Iterator[OrderedSetSuperpartition]:
    """All of OSP_{n,k,s} (or the slice with ``r`` bars), in a fixed order.

    Values are placed in increasing order, so a value landing in an empty
    block among the first ``s`` is that block's minimum and must stay unbarred.
    """
    if k < s or s < 0:
        raise ValueError("need 0 <= s <= k")
    if r is not None and r < 0:
        return
    for blocks in _place(n, k, s, r):
        yield OrderedSetSuperpartition(n, k, s, blocks)


def _place(n, k, s, r):
    blocks = [[] for _ in range(k)]
    empty_front = [s]
    bars = [0]

    def rec(v):
        if v > n:
            if empty_front[0] == 0 and (r is None or bars[0] == r):
                yield tuple(tuple(b) for b in blocks)
            return
        remaining = n - v + 1
        for i in range(k):
            blk = blocks[i]
            fresh_front = i < s and not blk
            if not fresh_front and empty_front[0] > remaining - 1:
                continue
            choices = (False,) if fresh_front else (False, True)
            for barred in choices:
                if barred and r is not None and bars[0] >= r:
                    continue
                blk.append(Letter(v, barred))
                bars[0] += barred
                empty_front[0] -= fresh_front
                yield from rec(v + 1)
                empty_front[0] += fresh_front
                bars[0] -= barred
                blk.pop()

    yield from rec(1)


def stirling2(n: int, k: int) -> int:
    return _stirling2(n, k)


@lru_cache(maxsize=None)
def _stirling2(n, k):
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def count_osp(n: int, k: int, s: int, r: int | None = None) -> int:
    """Closed-form count.

    Choose which of the last ``k - s`` blocks are occupied, an ordered set
    partition onto the occupied blocks, then bars on any of the ``n - s``
    elements that are not minima of the first ``s`` blocks.
    """
    if k < s or s < 0:
        raise ValueError("need 0 <= s <= k")
    if n < s:
        return 0
    shapes = sum(math.comb(k - s, t) * math.factorial(s + t) * stirling2(n, s + t)
                 for t in range(k - s + 1))
    if r is None:
        return shapes * 2 ** (n - s)
    return shapes * math.comb(n - s, r) if 0 <= r <= n - s else 0


# ----------------------------------------------------------------------
# coinversion code

def code(sigma: OrderedSetSuperpartition) -> tuple:
    """The coinversion code ``(c_1, ..., c_n)``; bars follow the values."""
    s = sigma.s
    mins = sigma.mins()
    front = mins[:s]
    out = [None] * sigma.n
    for i, blk in enumerate(sigma.blocks, 1):
        for c in blk:
            a = c.value
            if c.barred:
                if i <= s:
                    val = sum(1 for m in mins[:i - 1] if m < a)
                else:
                    val = sum(1 for m in front if m < a) + (i - s - 1)
            else:
                val = sum(1 for m in front[i:] if m > a)
                if not (i <= s and a == mins[i - 1]):
                    val += i - 1
            out[a - 1] = Letter(val, c.barred)
    return tuple(out)


def coinv(sigma: OrderedSetSuperpartition) -> int:
    return sum(c.value for c in code(sigma))


def _labels(blocks, k, s):
    """Current unbarred and barred block labels during insertion."""
    unbarred = {}
    empty = [i for i in range(s) if not blocks[i]]
    for lab, i in enumerate(reversed(empty)):
        unbarred[lab] = i
    lab = len(empty)
    for i in range(k):
        if i < s and not blocks[i]:
            continue
        unbarred[lab] = i
        lab += 1
    barred = {}
    lab = 0
    for i in range(k):
        if i >= s or blocks[i]:
            barred[lab] = i
            lab += 1
    return unbarred, barred


def decode(word, n: int, k: int, s: int) -> OrderedSetSuperpartition:
    """Inverse of :func:`code` by left-to-right insertion.

    >>> from superspace.words import parse_word
    >>> str(decode(parse_word("1,~2,0,~1,0,4,0,~2"), 8, 5, 3))
    '(5,7|1|3,~4,~8||~2,6)'
    """
    word = tuple(word)
    if len(word) != n:
        raise ValueError("word length must equal n")
    if not is_substaircase(word, n, k, s):
        raise ValueError("word is not a substaircase word")
    blocks = [[] for _ in range(k)]
    for v, c in enumerate(word, 1):
        unbarred, barred = _labels(blocks, k, s)
        target = (barred if c.barred else unbarred).get(c.value)
        if target is None:
            raise ValueError(f"no block labelled {c} at step {v}")
        blocks[target].append(Letter(v, c.barred))
    return OrderedSetSuperpartition(n, k, s, blocks)


# ----------------------------------------------------------------------
# substaircase words

def is_substaircase(word, n: int, k: int, s: int) -> bool:
    word = tuple(word)
    if len(word) != n:
        return False
    for c in word:
        if n < s:
            return False
        if c.barred:
            if not 0 <= c.value <= k - s - 1:
                return False
        elif c.value < s:
            s -= 1
        elif c.value > k - 1:
            return False
        n -= 1
    return s == 0


def substaircase(n: int, k: int, s: int, r: int | None = None) -> list:
    """SS_{n,k,s} (restricted to ``r`` bars when given), via first-letter recursion."""
    if k < s or s < 0:
        raise ValueError("need 0 <= s <= k")
    if r is None:
        return [w for rr in range(n + 1) for w in _substaircase(n, k, s, rr)]
    return list(_substaircase(n, k, s, r))


@lru_cache(maxsize=None)
def _substaircase(n, k, s, r):
    if r < 0 or n < s:
        return ()
    if n == 0:
        return ((),) if s == 0 and r == 0 else ()
    out = []
    for a in range(k - s):
        out.extend((Letter(a, True),) + w for w in _substaircase(n - 1, k, s, r - 1))
    for a in range(s):
        out.extend((Letter(a),) + w for w in _substaircase(n - 1, k, s - 1, r))
    for a in range(s, k):
        out.extend((Letter(a),) + w for w in _substaircase(n - 1, k, s, r))
    return tuple(out)


@lru_cache(maxsize=None)
def count_substaircase(n: int, k: int, s: int, r: int) -> int:
    if r < 0 or n < s:
        return 0
    if n == 0:
        return int(s == 0 and r == 0)
    return ((k - s) * count_substaircase(n - 1, k, s, r - 1)
            + s * count_substaircase(n - 1, k, s - 1, r)
            + (k - s) * count_substaircase(n - 1, k, s, r))


# ----------------------------------------------------------------------
# column diagrams

@dataclass(frozen=True)
class ColumnDiagram:
    """Columns of a superpartition drawn on an integer height axis.

    ``up[i]`` holds the barred entries of column ``i`` at heights 1, 2, ...;
    ``down[i]`` holds the unbarred entries, starting at height 0 for the
    first ``s`` columns and at -1 otherwise (height 0 then holds a bullet).
    """

    k: int
    s: int
    up: tuple
    down: tuple

    def top(self, i: int) -> int:
        return len(self.up[i])

    def bottom(self, i: int) -> int:
        """Lowest filled height of column ``i`` (the bullet counts as filled)."""
        if i < self.s:
            return 1 - len(self.down[i])
        return -len(self.down[i])

    def cells(self) -> dict:
        """(column, height) -> value, bullets read as 0."""
        out = {}
        for i in range(self.k):
            for h, v in enumerate(self.up[i], 1):
                out[i, h] = v
            start = 0 if i < self.s else -1
            for j, v in enumerate(self.down[i]):
                out[i, start - j] = v
            if i >= self.s:
                out[i, 0] = 0
        return out

    def to_osp(self) -> OrderedSetSuperpartition:
        blocks = [[(v, True) for v in self.up[i]] + [(v, False) for v in self.down[i]]
                  for i in range(self.k)]
        n = sum(len(b) for b in blocks)
        return OrderedSetSuperpartition(n, self.k, self.s, blocks)


def column_diagram(sigma: OrderedSetSuperpartition) -> ColumnDiagram:
    up = tuple(tuple(c.value for c in blk if c.barred) for blk in sigma.blocks)
    down = tuple(tuple(c.value for c in blk if not c.barred) for blk in sigma.blocks)
    return ColumnDiagram(sigma.k, sigma.s, up, down)


def reading_word(sigma: OrderedSetSuperpartition) -> tuple:
    """Read the diagram top to bottom, each row right to left, skipping bullets."""
    diagram = column_diagram(sigma)
    cells = diagram.cells()
    order = sorted(((h, i) for (i, h), v in cells.items() if not (v == 0)),
                   key=lambda t: (-t[0], -t[1]))
    return tuple(cells[i, h] for h, i in order)


def inverse_descents(word) -> frozenset:
    pos = {v: p for p, v in enumerate(word)}
    return frozenset(i for i in range(1, len(word)) if pos[i] > pos[i + 1])


def reading_word_ides(sigma: OrderedSetSuperpartition) -> tuple:
    """``(read(sigma), iDes(read(sigma)))``."""
    from .core import Permutation
    word = reading_word(sigma)
    return Permutation(word) if word else Permutation(()), inverse_descents(word)


def codinv(sigma: OrderedSetSuperpartition) -> int:
    """Diagonal coinversions of the column diagram.

    Counts pairs ``a < b`` with ``a`` left of ``b`` in the same row, or ``a``
    right of ``b`` one row lower.  Bullets read as 0 and every empty cell below
    a column reads as +infinity, which can only play the role of ``b``.
    """
    diagram = column_diagram(sigma)
    cells = diagram.cells()
    bottoms = [diagram.bottom(i) for i in range(diagram.k)]
    total = 0
    rows: dict = {}
    for (i, h), v in cells.items():
        rows.setdefault(h, []).append((i, v))
    for (i, h), a in cells.items():
        for j, b in rows.get(h, ()):
            if j > i and a < b:
                total += 1
        for j, b in rows.get(h + 1, ()):
            if j < i and a < b:
                total += 1
        # infinite cells: same row to the right, one row up to the left
        total += sum(1 for j in range(i + 1, diagram.k) if bottoms[j] > h)
        total += sum(1 for j in range(i) if bottoms[j] > h + 1)
    return total


# ----------------------------------------------------------------------
# the complementation involution for k = s

def complement(sigma: OrderedSetSuperpartition) -> OrderedSetSuperpartition:
    """Reverse the blocks and toggle the bar on every non-minimal element."""
    if sigma.k != sigma.s:
        raise ValueError("complement is defined only when k = s")
    blocks = []
    for blk in reversed(sigma.blocks):
        blocks.append([blk[0]] + [Letter(c.value, not c.barred) for c in blk[1:]])
    return OrderedSetSuperpartition(sigma.n, sigma.k, sigma.s, blocks)
