"""Sparse exact row reduction keyed by a total order on columns.

Vectors are dicts ``column -> Fraction``.  Rows are kept in semi-echelon
form: each stored row has a distinct leading column and rows are never
back-substituted.  Any nonzero combination of such rows leads with one of the
stored leading columns, so reducing a vector until its lead is new (or it
vanishes) decides membership and yields coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping


class Echelon:
    def __init__(self, key: Callable | None = None, track: bool = False):
        self._key = key
        self._keys: dict = {}
        self.track = track
        self.rows: dict = {}      # lead column -> row vector
        self.combos: dict = {}    # lead column -> {tag: coefficient}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _sortkey(self, col):
        if self._key is None:
            return col
        k = self._keys.get(col)
        if k is None:
            k = self._keys[col] = self._key(col)
        return k

    def lead(self, vec: Mapping) -> Hashable:
        return max(vec, key=self._sortkey)

    def reduce(self, vec: Mapping, combo: dict | None = None):
        """Return ``(residue, coords, combo)``.

        ``coords`` expresses ``vec - residue`` in the stored rows (keyed by
        their leads); ``combo`` does the same in terms of inserted tags when
        tracking is on.
        """
        vec = {c: Fraction(v) for c, v in vec.items() if v}
        coords: dict = {}
        combo = dict(combo) if combo else {}
        while vec:
            col = self.lead(vec)
            row = self.rows.get(col)
            if row is None:
                break
            factor = vec[col] / row[col]
            coords[col] = coords.get(col, 0) + factor
            for c, v in row.items():
                nv = vec.get(c, 0) - factor * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
            if self.track:
                for t, v in self.combos[col].items():
                    nv = combo.get(t, 0) - factor * v
                    if nv:
                        combo[t] = nv
                    else:
                        combo.pop(t, None)
        return vec, coords, combo

    def insert(self, vec: Mapping, tag: Hashable = None) -> bool:
        """Add ``vec`` to the span; returns True if it was independent."""
        residue, _, combo = self.reduce(vec, {tag: Fraction(1)} if self.track else None)
        if not residue:
            return False
        col = self.lead(residue)
        self.rows[col] = residue
        if self.track:
            self.combos[col] = combo
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)[0]

    def solve(self, vec: Mapping) -> dict:
        """Coefficients over inserted tags reproducing ``vec``; ValueError if outside the span."""
        if not self.track:
            raise ValueError("solve needs tracking enabled")
        residue, _, combo = self.reduce(vec)
        if residue:
            raise ValueError("vector is not in the span")
        # reduce() accumulates -(sum of subtracted rows); flip to get vec itself
        return {t: -v for t, v in combo.items()}


def rank(vectors, key: Callable | None = None) -> int:
    ech = Echelon(key)
    for v in vectors:
        ech.insert(v)
    return ech.rank
