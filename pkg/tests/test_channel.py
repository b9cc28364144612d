import itertools
import random
from collections import Counter

import pytest

from srcodes.channel import (
    ErrorBudget,
    ball_size,
    composition_count,
    compositions,
    enumerate_errors,
    sample_error,
    shell_size,
    trial_rng,
)
from srcodes.errors import EnumerationCapError
from srcodes.sumrank import SrWord, classify, sr_weight


def _brute_shell(ell, w):
    words = itertools.product(range(4), repeat=2 * ell)
    return [SrWord(v[:ell], v[ell:]) for v in words if sr_weight(SrWord(v[:ell], v[ell:])) == w]


def test_enumerate_examples():
    errs = list(enumerate_errors(4, 1))
    assert len(errs) == 36 and all(classify(e).i3 == 1 for e in errs)
    errs = list(enumerate_errors(1, 2))
    assert len(errs) == 15
    assert Counter(sr_weight(e) for e in errs) == {1: 9, 2: 6}
    assert list(enumerate_errors(3, 0)) == []


@pytest.mark.parametrize("ell", range(1, 7))
def test_enumeration_count_matches_closed_form(ell):
    w_max = 4
    seen = set()
    weights = []
    for e in enumerate_errors(ell, w_max):
        key = (e.v1, e.v2)
        assert key not in seen
        seen.add(key)
        weights.append(sr_weight(e))
    assert len(seen) == ball_size(ell, w_max)
    assert weights == sorted(weights) and min(weights) >= 1 and max(weights) <= w_max


def test_closed_form_against_brute_force():
    for ell in (1, 2, 3):
        for w in range(2 * ell + 1):
            assert shell_size(ell, w) == len(_brute_shell(ell, w))
    assert sum(shell_size(3, w) for w in range(7)) == 4 ** 6


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        next(enumerate_errors(8, 4, cap=1000))


def test_error_budget_validation():
    b = ErrorBudget(4, 5, (1, 1, 1))
    assert b.count == composition_count(4, (1, 1, 1)) == 24 * 3 * 3 * 9
    with pytest.raises(ValueError):
        ErrorBudget(4, 5, (1, 1, 0))
    with pytest.raises(ValueError):
        ErrorBudget(2, 5, (1, 1, 1))


def test_sample_examples():
    assert sample_error(4, 0, 1).is_zero()
    for s in range(50):
        e = sample_error(4, 1, s)
        c = classify(e)
        assert (c.i1, c.i2, c.i3) == (0, 0, 1)
    with pytest.raises(ValueError):
        sample_error(2, 5, 0)
    with pytest.raises(ValueError):
        sample_error(2, -1, 0)


def test_sampling_reproducible():
    assert sample_error(8, 5, 123) == sample_error(8, 5, 123)
    a = [sample_error(6, 3, trial_rng(7, c)) for c in range(20)]
    b = [sample_error(6, 3, trial_rng(7, c)) for c in range(20)]
    assert a == b
    assert len(set((e.v1, e.v2) for e in a)) > 1


def test_sampling_uniform_chi_square():
    # ell = 2, w = 4: compositions (2,0,0), (0,2,0), (1,1,0) with 9, 9, 18 words
    assert {c: composition_count(2, c) for c in compositions(2, 4)} == {(2, 0, 0): 9, (0, 2, 0): 9, (1, 1, 0): 18}
    shell = _brute_shell(2, 4)
    assert len(shell) == 36
    n = 100_000
    rng = random.Random(2024)
    counts = Counter()
    comps = Counter()
    for _ in range(n):
        e = sample_error(2, 4, rng)
        counts[(e.v1, e.v2)] += 1
        c = classify(e)
        comps[(c.i1, c.i2, c.i3)] += 1
    assert set(counts) == {(e.v1, e.v2) for e in shell}
    expected = n / 36
    chi_words = sum((k - expected) ** 2 / expected for k in counts.values())
    assert chi_words < 66.62  # chi^2_{35}, p = 0.001
    chi_comp = sum((comps[c] - n * m / 36) ** 2 / (n * m / 36) for c, m in (((2, 0, 0), 9), ((0, 2, 0), 9), ((1, 1, 0), 18)))
    assert chi_comp < 13.82  # chi^2_2, p = 0.001
