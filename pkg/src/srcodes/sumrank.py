"""2x2 binary matrix picture of pairs over GF(4) and the sum-rank weight.

A pair (x1, x2) in GF(4)^2 stands for the GF(2)-linear map
L(x) = x1*x + x2*x^2 on GF(4).  ``phi`` writes that map as a binary 2x2
matrix in the basis {1, w}: column j holds the coordinates of L(basis_j).
A sum-rank word is a pair of GF(4) vectors (v1, v2) read blockwise.

Indices are 0-based here; text reports use 1-based positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import CodeError, ConfigError
from .gf import GF4, W, format_vec, parse_vec

DEFAULT_PAIR_CAP = 1 << 24


@dataclass(frozen=True)
class Mat2:
    """Binary 2x2 matrix, entries row-major as (m00, m01, m10, m11)."""

    bits: tuple

    def __post_init__(self):
        if len(self.bits) != 4 or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bad Mat2 entries {self.bits!r}")

    def __xor__(self, other: "Mat2") -> "Mat2":
        return Mat2(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def rows(self) -> tuple:
        return self.bits[:2], self.bits[2:]

    def __str__(self):
        r0, r1 = self.rows()
        return f"{r0[0]}{r0[1]}\n{r1[0]}{r1[1]}"


ZERO_MAT = Mat2((0, 0, 0, 0))
IDENTITY_MAT = Mat2((1, 0, 0, 1))


def linearized(x1: int, x2: int, x: int) -> int:
    """Evaluate x1*x + x2*x^2 in GF(4)."""
    return GF4.mul(x1, x) ^ GF4.mul(x2, GF4.mul(x, x))


def phi(x1: int, x2: int) -> Mat2:
    col0 = linearized(x1, x2, 1)
    col1 = linearized(x1, x2, W)
    # Row r holds coordinate r (bit r) of each column.
    return Mat2((col0 & 1, col1 & 1, col0 >> 1, col1 >> 1))


def phi_inverse(m: Mat2) -> tuple:
    """Recover (x1, x2) from a matrix; exhaustive over the 16 pairs."""
    return _PHI_INV[m]


def rank2(m: Mat2) -> int:
    a, b, c, d = m.bits
    if not (a or b or c or d):
        return 0
    return 2 if (a & d) ^ (b & c) else 1


_PHI_INV = {phi(x1, x2): (x1, x2) for x1 in range(4) for x2 in range(4)}
# Block rank indexed by 4*x1 + x2, read off phi/rank2 directly.
RANK_TABLE = np.array([rank2(phi(x1, x2)) for x1 in range(4) for x2 in range(4)], dtype=np.int64)


@dataclass(frozen=True)
class SrWord:
    """Sum-rank word v1*x + v2*x^2 over GF(4)^ell."""

    v1: tuple
    v2: tuple

    def __post_init__(self):
        object.__setattr__(self, "v1", tuple(int(a) for a in self.v1))
        object.__setattr__(self, "v2", tuple(int(a) for a in self.v2))
        if len(self.v1) != len(self.v2) or not self.v1:
            raise ValueError("v1 and v2 must have the same positive length")
        if any(not 0 <= a < 4 for a in self.v1 + self.v2):
            raise ValueError("symbols must be GF(4) elements 0..3")

    @classmethod
    def zero(cls, ell: int) -> "SrWord":
        return cls((0,) * ell, (0,) * ell)

    @property
    def ell(self) -> int:
        return len(self.v1)

    def __add__(self, other: "SrWord") -> "SrWord":
        if other.ell != self.ell:
            raise ValueError("length mismatch")
        return SrWord(
            tuple(a ^ b for a, b in zip(self.v1, other.v1)),
            tuple(a ^ b for a, b in zip(self.v2, other.v2)),
        )

    __sub__ = __add__

    def is_zero(self) -> bool:
        return not any(self.v1) and not any(self.v2)

    def matrices(self) -> list:
        return [phi(a, b) for a, b in zip(self.v1, self.v2)]

    @classmethod
    def from_matrices(cls, mats: Sequence[Mat2]) -> "SrWord":
        pairs = [phi_inverse(m) for m in mats]
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def to_text(self) -> str:
        return f"v1: {format_vec(self.v1)}\nv2: {format_vec(self.v2)}\n"

    @classmethod
    def from_text(cls, text: str) -> "SrWord":
        parts = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            if not sep or key.strip() not in ("v1", "v2"):
                raise ConfigError(f"bad SrWord line: {line!r}")
            parts[key.strip()] = parse_vec(rest)
        if set(parts) != {"v1", "v2"}:
            raise ConfigError("SrWord text needs both v1: and v2: lines")
        return cls(parts["v1"], parts["v2"])

    def matrix_dump(self) -> str:
        """ell blocks of two bit rows, blank line between blocks."""
        return "\n\n".join(str(m) for m in self.matrices()) + "\n"


class ErrorClassification(NamedTuple):
    I1: frozenset
    I2: frozenset
    I3: frozenset

    @property
    def i1(self) -> int:
        return len(self.I1)

    @property
    def i2(self) -> int:
        return len(self.I2)

    @property
    def i3(self) -> int:
        return len(self.I3)

    def report(self) -> str:
        def fmt(s):
            return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"

        return f"I1={fmt(self.I1)} I2={fmt(self.I2)} I3={fmt(self.I3)}"


def classify(w: SrWord) -> ErrorClassification:
    i1, i2, i3 = set(), set(), set()
    for i, (a, b) in enumerate(zip(w.v1, w.v2)):
        if a and not b:
            i1.add(i)
        elif b and not a:
            i2.add(i)
        elif a and b:
            i3.add(i)
    return ErrorClassification(frozenset(i1), frozenset(i2), frozenset(i3))


def sr_weight(w: SrWord) -> int:
    return sum(rank2(phi(a, b)) for a, b in zip(w.v1, w.v2))


def hamming_weight(v) -> int:
    return sum(1 for a in v if a)


def weight_identity_check(a1: Sequence[int], a2: Sequence[int]) -> tuple:
    """Return (block-rank sum, 2 wt(a1) + 2 wt(a2) - 3 |supp a1 & supp a2|)."""
    if len(a1) != len(a2):
        raise ValueError("length mismatch")
    lhs = sr_weight(SrWord(a1, a2))
    overlap = sum(1 for x, y in zip(a1, a2) if x and y)
    rhs = 2 * hamming_weight(a1) + 2 * hamming_weight(a2) - 3 * overlap
    return lhs, rhs


def sr_distance_bounds(d1: int, d2: int) -> tuple:
    """(min(d1, 2 d2), 2 d1): the bracket on d_sr from the constituent distances."""
    if d1 < 1 or d2 < 1:
        raise ValueError("distances must be positive")
    return min(d1, 2 * d2), 2 * d1


@dataclass(frozen=True)
class SrDistance:
    """Minimum sum-rank distance, exact or only bracketed.

    ``exact`` means ``lower == upper`` is the true value.  ``upper`` may be
    None when no valid upper bound is known.
    """

    lower: int
    upper: int | None
    exact: bool

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def __str__(self):
        if self.exact:
            return str(self.lower)
        return f"[{self.lower},{'?' if self.upper is None else self.upper}]"


def sr_min_distance_exhaustive(C1, C2, cap: int = DEFAULT_PAIR_CAP) -> SrDistance:
    """Minimum sum-rank weight over all nonzero (a1, a2) in C1 x C2.

    Block ranks come from ``RANK_TABLE`` (i.e. from phi and rank2), not from
    the weight identity.  Beyond ``cap`` pairs only the bracket is returned.
    """
    if C1.n != C2.n:
        raise CodeError("C1 and C2 must have equal length")
    if 4 ** (C1.k + C2.k) > cap:
        lo, hi = sr_distance_bounds(C1.d, C2.d)
        return SrDistance(lo, hi if C1.d_exact else None, False)
    cb1 = C1.codebook().astype(np.int64) * 4
    cb2 = C2.codebook().astype(np.int64)
    best = None
    # Pair each a2 with all of C1 at once.
    for j, a2 in enumerate(cb2):
        w = RANK_TABLE[cb1 + a2].sum(axis=1)
        if j == 0:
            w = w[1:]  # skip (0, 0)
        if w.size:
            m = int(w.min())
            best = m if best is None else min(best, m)
    if best is None:
        raise CodeError("SR(C1, C2) has no nonzero codeword")
    return SrDistance(best, best, True)
