"""Sum-rank error words: exhaustive enumeration and uniform sampling.

A weight-w error is fixed by its composition (i1, i2, i3), the sizes of the
position classes (v1 only, v2 only, both nonzero), with 2*i1 + 2*i2 + i3 = w.
There are ``multinomial(ell; i1, i2, i3, rest) * 3^i1 * 3^i2 * 9^i3`` words
per composition.

Randomness comes from :class:`random.Random` (Mersenne Twister).  Trial
``c`` of a run seeded with ``s`` uses ``random.Random(f"{s}/{c}")``; string
seeds are hashed with SHA-512, so streams are stable across processes and
platforms.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import EnumerationCapError
from .sumrank import SrWord, sr_weight

DEFAULT_ERROR_CAP = 4 ** 12

_NONZERO = (1, 2, 3)
_PAIRS = tuple(itertools.product(_NONZERO, _NONZERO))


@dataclass(frozen=True)
class ErrorBudget:
    ell: int
    w: int
    composition: tuple

    def __post_init__(self):
        i1, i2, i3 = self.composition
        if min(i1, i2, i3) < 0 or 2 * i1 + 2 * i2 + i3 != self.w:
            raise ValueError(f"composition {self.composition} does not have weight {self.w}")
        if i1 + i2 + i3 > self.ell:
            raise ValueError(f"composition {self.composition} needs more than {self.ell} positions")

    @property
    def count(self) -> int:
        return composition_count(self.ell, self.composition)


def compositions(ell: int, w: int) -> list:
    out = []
    for i1 in range(w // 2 + 1):
        for i2 in range((w - 2 * i1) // 2 + 1):
            i3 = w - 2 * i1 - 2 * i2
            if i1 + i2 + i3 <= ell:
                out.append((i1, i2, i3))
    return out


def composition_count(ell: int, comp: tuple) -> int:
    i1, i2, i3 = comp
    rest = ell - i1 - i2 - i3
    if rest < 0:
        return 0
    multinomial = factorial(ell) // (factorial(i1) * factorial(i2) * factorial(i3) * factorial(rest))
    return multinomial * 3 ** i1 * 3 ** i2 * 9 ** i3


def shell_size(ell: int, w: int) -> int:
    """Number of words of sum-rank weight exactly w."""
    return sum(composition_count(ell, c) for c in compositions(ell, w))


def ball_size(ell: int, w_max: int) -> int:
    """Number of nonzero words of sum-rank weight at most w_max."""
    return sum(shell_size(ell, w) for w in range(1, w_max + 1))


def enumerate_errors(ell: int, w_max: int, cap: int = DEFAULT_ERROR_CAP) -> Iterator[SrWord]:
    """Every word with 1 <= sum-rank weight <= w_max, once, by increasing weight."""
    total = ball_size(ell, w_max)
    if total > cap:
        raise EnumerationCapError(f"{total} error words exceeds cap {cap}")
    positions = range(ell)
    for w in range(1, w_max + 1):
        for i1, i2, i3 in compositions(ell, w):
            for I3 in itertools.combinations(positions, i3):
                left = [p for p in positions if p not in I3]
                for I1 in itertools.combinations(left, i1):
                    left2 = [p for p in left if p not in I1]
                    for I2 in itertools.combinations(left2, i2):
                        yield from _fill(ell, I1, I2, I3)


def _fill(ell, I1, I2, I3):
    for a in itertools.product(_NONZERO, repeat=len(I1)):
        for b in itertools.product(_NONZERO, repeat=len(I2)):
            for c in itertools.product(_PAIRS, repeat=len(I3)):
                v1, v2 = [0] * ell, [0] * ell
                for p, x in zip(I1, a):
                    v1[p] = x
                for p, x in zip(I2, b):
                    v2[p] = x
                for p, (x, y) in zip(I3, c):
                    v1[p], v2[p] = x, y
                yield SrWord(v1, v2)


def trial_rng(seed: int, counter: int) -> random.Random:
    return random.Random(f"{seed}/{counter}")


def sample_error(ell: int, w: int, rng_seed) -> SrWord:
    """Uniform draw from all words of sum-rank weight exactly w.

    ``rng_seed`` is an int seed or a ``random.Random`` instance.
    """
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    if w == 0:
        return SrWord.zero(ell)
    comps = compositions(ell, w)
    if w < 0 or not comps:
        raise ValueError(f"no word of sum-rank weight {w} at length {ell}")
    pick = rng.randrange(sum(composition_count(ell, c) for c in comps))
    for comp in comps:
        pick -= composition_count(ell, comp)
        if pick < 0:
            break
    i1, i2, i3 = comp
    support = rng.sample(range(ell), i1 + i2 + i3)
    v1, v2 = [0] * ell, [0] * ell
    for p in support[:i1]:
        v1[p] = rng.choice(_NONZERO)
    for p in support[i1:i1 + i2]:
        v2[p] = rng.choice(_NONZERO)
    for p in support[i1 + i2:]:
        v1[p], v2[p] = rng.choice(_NONZERO), rng.choice(_NONZERO)
    e = SrWord(v1, v2)
    assert sr_weight(e) == w
    return e

