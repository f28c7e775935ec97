import numpy as np
import pytest

from superspace.osp import code, codinv, count_osp, enumerate_osp, is_substaircase, reading_word_ides
from superspace.osp_batch import (as_arrays, batch_code, batch_decode, batch_is_substaircase,
                                  batch_stats, code_bijection_check, families, stat_counts)
from superspace.series import _cd_counts_scalar
from superspace.words import Letter

CASES = [(n, k, s) for n in range(1, 5) for k in range(1, n + 2) for s in range(k + 1)]


@pytest.mark.parametrize("n, k, s", CASES)
def test_families_cover_osp(n, k, s):
    total = sum(len(blk) for blk, _ in families(n, k, s))
    assert total == count_osp(n, k, s)


@pytest.mark.parametrize("n, k, s", CASES)
def test_kernels_match_scalar_functions(n, k, s):
    sigmas = list(enumerate_osp(n, k, s))
    blk, bar = as_arrays(sigmas)
    values = batch_code(blk, bar, k, s)
    r, coinv, cod, ides = batch_stats(blk, bar, k, s)
    for i, sigma in enumerate(sigmas):
        word = code(sigma)
        assert values[i].tolist() == [c.value for c in word]
        assert r[i] == sigma.r
        assert coinv[i] == sum(c.value for c in word)
        assert cod[i] == codinv(sigma)
        expected = reading_word_ides(sigma)[1]
        assert {v + 1 for v in range(n) if ides[i] >> v & 1} == expected
    assert (batch_decode(values, bar, k, s) == blk).all()


@pytest.mark.parametrize("n, k, s", [(3, 2, 1), (4, 3, 2), (5, 2, 0), (5, 4, 4)])
def test_stat_counts_match_scalar(n, k, s):
    assert stat_counts(n, k, s) == _cd_counts_scalar(n, k, s)


def test_degenerate_sizes():
    assert stat_counts(0, 2, 0) == _cd_counts_scalar(0, 2, 0)
    assert stat_counts(2, 3, 3) == {}
    assert code_bijection_check(2, 3, 3)["pass"]
    assert code_bijection_check(0, 1, 0)["pass"]


def test_substaircase_kernel_on_random_words():
    rng = np.random.default_rng(3)
    for n, k, s in [(4, 3, 2), (5, 4, 1), (5, 3, 3), (4, 4, 0)]:
        values = rng.integers(0, k + 1, size=(2000, n))
        bars = rng.random((2000, n)) < 0.4
        got = batch_is_substaircase(values, bars, k, s)
        for v, b, g in zip(values.tolist(), bars.tolist(), got.tolist()):
            word = tuple(Letter(a, bb) for a, bb in zip(v, b))
            assert g == is_substaircase(word, n, k, s)


def test_decode_marks_impossible_rows():
    values = np.array([[2, 2]])
    bars = np.zeros((1, 2), dtype=bool)
    assert (batch_decode(values, bars, 2, 1) == -1).all()


@pytest.mark.parametrize("n, k, s", [(n, k, s) for n in range(1, 6) for k in range(1, n + 2)
                                     for s in range(k + 1)])
def test_bijection_check(n, k, s):
    report = code_bijection_check(n, k, s)
    assert report["pass"]
    assert report["osp"] == report["ss"] == count_osp(n, k, s)
