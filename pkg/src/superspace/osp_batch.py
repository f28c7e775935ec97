"""Vectorised statistics over whole families of superpartitions.

A family is a pair of arrays ``blk`` (block index, 0-based) and ``bar`` (bool),
both of shape ``(N, n)`` with column ``v`` describing the value ``v + 1``.
These kernels reproduce :func:`superspace.osp.code`, :func:`~superspace.osp.codinv`
and the reading-word inverse descents for millions of objects at once.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

import numpy as np

from .osp import _labels


@lru_cache(maxsize=8)
def _products(n: int, k: int) -> np.ndarray:
    out = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int8).reshape(-1, n)
    out.setflags(write=False)
    return out


def all_assignments(n: int, k: int, s: int, bar_pattern) -> tuple:
    """Valid (blk, bar) rows with the given bar pattern (a tuple of n bools)."""
    blk = _products(n, k)
    bar = np.broadcast_to(np.array(bar_pattern, dtype=bool), blk.shape)
    ok = np.ones(len(blk), dtype=bool)
    for i in range(s):
        inside = blk == i
        ok &= inside.any(axis=1)
        first = inside.argmax(axis=1)
        ok &= ~bar[np.arange(len(blk)), first]
    return np.ascontiguousarray(blk[ok]), np.ascontiguousarray(bar[ok])


def as_arrays(sigmas) -> tuple:
    """(blk, bar) arrays for a list of superpartitions of the same n."""
    rows = [sigma.block_of() for sigma in sigmas]
    n = sigmas[0].n if sigmas else 0
    blk = np.array([[row[v][0] - 1 for v in range(1, n + 1)] for row in rows], dtype=np.int8)
    bar = np.array([[row[v][1] for v in range(1, n + 1)] for row in rows], dtype=bool)
    return blk.reshape(len(rows), n), bar.reshape(len(rows), n)


def families(n: int, k: int, s: int, r: int | None = None):
    """Yield (blk, bar) chunks covering OSP_{n,k,s} (optionally with r bars)."""
    for pattern in itertools.product((False, True), repeat=n):
        if r is not None and sum(pattern) != r:
            continue
        blk, bar = all_assignments(n, k, s, pattern)
        if len(blk):
            yield blk, bar


def _minima(blk, k):
    N, n = blk.shape
    big = n + 1
    mins = np.full((N, k), big, dtype=np.int16)
    for v in range(n - 1, -1, -1):
        col = blk[:, v]
        for i in range(k):
            mins[col == i, i] = v + 1
    return mins


def _heights(blk, bar, s):
    N, n = blk.shape
    same = np.zeros((N, n), dtype=np.int16)
    for v in range(n):
        for u in range(v):
            same[:, v] += (blk[:, u] == blk[:, v]) & (bar[:, u] == bar[:, v])
    front = blk < s
    return np.where(bar, same + 1, np.where(front, -same, -1 - same))


def batch_code(blk, bar, k: int, s: int):
    """Values of the coinversion code, shape (N, n); bars equal ``bar``."""
    N, n = blk.shape
    mins = _minima(blk, k)
    out = np.zeros((N, n), dtype=np.int16)
    col1 = blk.astype(np.int16) + 1           # 1-based block index
    for v in range(n):
        a = v + 1
        i = col1[:, v]
        below_left = np.zeros(N, dtype=np.int16)   # front j < i with min < a
        front_less = np.zeros(N, dtype=np.int16)   # front j with min < a
        above_right = np.zeros(N, dtype=np.int16)  # front j > i with min > a
        for j in range(1, s + 1):
            m = mins[:, j - 1]
            less = m < a
            front_less += less
            below_left += less & (j < i)
            above_right += (m > a) & (j > i)
        barred_val = np.where(i <= s, below_left, front_less + (i - s - 1))
        is_min = (i <= s) & (mins[np.arange(N), np.minimum(i - 1, k - 1)] == a)
        plain_val = above_right + np.where(is_min, 0, i - 1)
        out[:, v] = np.where(bar[:, v], barred_val, plain_val)
    return out


def batch_stats(blk, bar, k: int, s: int) -> tuple:
    """(r, coinv, codinv, ides bitmask) arrays for a family."""
    N, n = blk.shape
    r = bar.sum(axis=1)
    coinv = batch_code(blk, bar, k, s).sum(axis=1)
    h = _heights(blk, bar, s)
    c = blk.astype(np.int16)

    # cells: the n values, then one bullet per column i >= s
    nb = k - s
    cols = np.concatenate([c, np.broadcast_to(np.arange(s, k, dtype=np.int16), (N, nb))], axis=1)
    hts = np.concatenate([h, np.zeros((N, nb), dtype=np.int16)], axis=1)
    vals = np.concatenate([np.broadcast_to(np.arange(1, n + 1, dtype=np.int16), (N, n)),
                           np.zeros((N, nb), dtype=np.int16)], axis=1)
    m = n + nb
    codinv = np.zeros(N, dtype=np.int32)
    for p in range(m):
        for q in range(m):
            if p == q:
                continue
            smaller = vals[:, p] < vals[:, q]
            same_row = (cols[:, p] < cols[:, q]) & (hts[:, p] == hts[:, q])
            diag = (cols[:, p] > cols[:, q]) & (hts[:, p] == hts[:, q] - 1)
            codinv += smaller & (same_row | diag)

    # infinite cells below each column's lowest filled cell
    unbarred = np.zeros((N, k), dtype=np.int16)
    for v in range(n):
        for j in range(k):
            unbarred[:, j] += (blk[:, v] == j) & ~bar[:, v]
    bottoms = np.where(np.arange(k) < s, 1 - unbarred, -unbarred)
    for p in range(m):
        cp, hp = cols[:, p], hts[:, p]
        for j in range(k):
            codinv += (j > cp) & (bottoms[:, j] > hp)
            codinv += (j < cp) & (bottoms[:, j] > hp + 1)

    # i is an inverse descent when i+1 is read first: higher row, or same row further right
    ides = np.zeros(N, dtype=np.int64)
    for v in range(n - 1):
        first_later = (h[:, v] < h[:, v + 1]) | ((h[:, v] == h[:, v + 1]) & (c[:, v] < c[:, v + 1]))
        ides |= first_later.astype(np.int64) << v
    return r, coinv, codinv, ides


def mask_to_set(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def stat_counts(n: int, k: int, s: int) -> dict:
    """{(r, stat, value, ides): count} for stat in coinv/codinv over OSP_{n,k,s}."""
    counts: Counter = Counter()
    if n < s or (k == 0 and n > 0):
        return {}
    if n == 0:
        return {(0, "coinv", 0, frozenset()): 1, (0, "codinv", 0, frozenset()): 1}
    for blk, bar in families(n, k, s):
        r, coinv, codinv, ides = batch_stats(blk, bar, k, s)
        for name, values in (("coinv", coinv), ("codinv", codinv)):
            # pack (r, value, ides) into one integer: ides < 2^n, values < 2^16
            key = (r.astype(np.int64) << (n + 16)) | (values.astype(np.int64) << n) | ides
            uniq, cnt = np.unique(key, return_counts=True)
            for packed, c in zip(uniq.tolist(), cnt.tolist()):
                rr, val, mask = packed >> (n + 16), (packed >> n) & 0xFFFF, packed & ((1 << n) - 1)
                counts[rr, name, val, mask_to_set(mask)] += c
    return dict(counts)


# ----------------------------------------------------------------------
# decoding by table lookup

def label_table(k: int, s: int) -> np.ndarray:
    """table[mask, barred, value] = target block (or -1); mask marks nonempty front blocks."""
    table = np.full((1 << s, 2, k), -1, dtype=np.int8)
    for mask in range(1 << s):
        blocks = [[1] if (i < s and mask >> i & 1) else [] for i in range(k)]
        unbarred, barred = _labels(blocks, k, s)
        for lab, i in unbarred.items():
            table[mask, 0, lab] = i
        for lab, i in barred.items():
            table[mask, 1, lab] = i
    return table


def batch_decode(values, bars, k: int, s: int):
    """Block assignment produced by insertion, -1 rows where a letter had no target."""
    N, n = values.shape
    table = label_table(k, s)
    mask = np.zeros(N, dtype=np.int64)
    blk = np.zeros((N, n), dtype=np.int8)
    bad = np.zeros(N, dtype=bool)
    for v in range(n):
        val = values[:, v].astype(np.int64)
        inrange = (val >= 0) & (val < k)
        target = table[mask, bars[:, v].astype(np.int64), np.clip(val, 0, k - 1)]
        target = np.where(inrange, target, -1)
        bad |= target < 0
        target = np.maximum(target, 0)
        blk[:, v] = target
        mask |= np.where(target < s, np.int64(1) << target.astype(np.int64), 0)
    blk[bad] = -1
    return blk


def batch_is_substaircase(values, bars, k: int, s: int):
    N, n = values.shape
    level = np.full(N, s, dtype=np.int64)
    ok = np.ones(N, dtype=bool)
    for v in range(n):
        remaining = n - v
        ok &= remaining >= level
        val = values[:, v].astype(np.int64)
        barred = bars[:, v]
        ok &= ~barred | ((val >= 0) & (val <= k - level - 1))
        drop = ~barred & (val < level)
        ok &= barred | (val <= k - 1)
        level = level - drop
    return ok & (level == 0)


def code_bijection_check(n: int, k: int, s: int) -> dict:
    """Check code/decode on all of OSP_{n,k,s} at once.

    decode(code(sigma)) == sigma for every sigma, every code is a substaircase
    word, and the codes are distinct.  Together with |SS| = |OSP| (counted by
    the substaircase recursion) this makes the two maps mutually inverse.
    """
    from .osp import count_substaircase

    if n == 0 or k == 0:
        size = int(n == 0 and s == 0)
        return {"osp": size, "ss": size, "roundtrip": True, "in_range": True,
                "injective": True, "pass": True}
    seen = 0
    roundtrip = in_range = True
    distinct = set()
    for blk, bar in families(n, k, s):
        values = batch_code(blk, bar, k, s)
        in_range &= bool(batch_is_substaircase(values, bar, k, s).all())
        roundtrip &= bool((batch_decode(values, bar, k, s) == blk).all())
        packed = np.zeros(len(blk), dtype=np.int64)
        for v in range(n):
            packed = packed * (2 * k) + values[:, v].astype(np.int64) * 2 + bar[:, v]
        distinct.update(packed.tolist())
        seen += len(blk)
    words = sum(count_substaircase(n, k, s, r) for r in range(n + 1)) if n >= s else 0
    return {"osp": seen, "ss": words, "roundtrip": roundtrip, "in_range": in_range,
            "injective": len(distinct) == seen,
            "pass": roundtrip and in_range and len(distinct) == seen == words}
