"""Exponent words: finite sequences of barred or unbarred nonnegative integers.

A word is the combinatorial shadow of a superspace monomial: position ``i``
carries the exponent of ``x_i`` and is barred when ``theta_i`` is present.
The same type carries coinversion codes and staircase words.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class Letter(NamedTuple):
    value: int
    barred: bool = False

    def __str__(self) -> str:
        return ("~" if self.barred else "") + str(self.value)


Word = tuple  # tuple[Letter, ...]


def letter_key(letter: Letter) -> tuple[int, int]:
    # ... < 2~ < 1~ < 0~ < 0 < 1 < 2 < ...
    if letter.barred:
        return (0, -letter.value)
    return (1, letter.value)


def word_key(word: Iterable[Letter]) -> tuple:
    """Sort key realising the superlex order on words of equal length."""
    return tuple(letter_key(c) for c in word)


def make_word(values: Iterable[int], bars: Iterable[int] = ()) -> tuple[Letter, ...]:
    """Build a word from plain values, barring the 1-based positions in ``bars``.

    >>> format_word(make_word([1, 0, 2], bars=[2]))
    '1,~0,2'
    """
    bars = set(bars)
    return tuple(Letter(v, i in bars) for i, v in enumerate(values, 1))


def word_sum(word: Iterable[Letter]) -> int:
    return sum(c.value for c in word)


def bar_count(word: Iterable[Letter]) -> int:
    return sum(1 for c in word if c.barred)


def format_word(word: Iterable[Letter]) -> str:
    return ",".join(str(c) for c in word)


def parse_word(text: str) -> tuple[Letter, ...]:
    """Inverse of :func:`format_word`.  Accepts ``~`` as the bar marker."""
    text = text.strip().strip("()")
    if not text:
        return ()
    letters = []
    for tok in text.split(","):
        tok = tok.strip()
        barred = tok.startswith("~")
        digits = tok[1:] if barred else tok
        if not digits.isdigit():
            raise ValueError(f"bad letter {tok!r}")
        letters.append(Letter(int(digits), barred))
    return tuple(letters)
