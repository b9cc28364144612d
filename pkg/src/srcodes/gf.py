"""Arithmetic in small binary extension fields GF(2^k), 1 <= k <= 8.

Elements are ints whose bits are coordinates in the polynomial basis
{1, a, ..., a^(k-1)}; bit 0 is the constant term.  For GF(4) this is the
basis {1, w} with w^2 = w + 1, so the four elements are

    0 -> 0b00,  1 -> 0b01,  w -> 0b10,  w^2 = 1 + w -> 0b11.

Hot loops work on raw ints through a :class:`FieldCtx`.  :class:`FieldElem`
wraps an int together with its context for the checked, operator-style API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import FieldMismatchError, UnsupportedEmbeddingError

# Default moduli, all primitive.
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
}

W = 0b10
W2 = 0b11


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Exhaustive trial division by every binary polynomial of degree <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for p in range(2, 1 << (deg // 2 + 1)):
        if _polymod(poly, p) == 0:
            return False
    return True


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """The field GF(2^k) defined by an irreducible binary modulus."""

    k: int
    modulus: int
    exp: tuple = field(init=False, repr=False)
    log: tuple = field(init=False, repr=False)
    gen: int = field(init=False)

    def __post_init__(self):
        if not 1 <= self.k <= 8:
            raise ValueError(f"extension degree must be in 1..8, got {self.k}")
        if self.modulus.bit_length() - 1 != self.k or not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#b} is not irreducible of degree {self.k}")
        size = 1 << self.k
        order = size - 1
        # Smallest element whose powers reach every nonzero element.
        for g in range(1, size):
            powers = [1]
            x = self._clmul_mod(1, g)
            while x != 1:
                powers.append(x)
                x = self._clmul_mod(x, g)
            if len(powers) == order:
                break
        log = [0] * size
        for i, p in enumerate(powers):
            log[p] = i
        object.__setattr__(self, "gen", g)
        # Doubled table so mul never needs a modulo.
        object.__setattr__(self, "exp", tuple(powers + powers))
        object.__setattr__(self, "log", tuple(log))

    def _clmul_mod(self, a: int, b: int) -> int:
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a >> self.k:
                a ^= self.modulus
        return p

    @property
    def size(self) -> int:
        return 1 << self.k

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return (1 << self.k) - 1

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[self.order - self.log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp[self.log[a] - self.log[b] + self.order]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha_pow(self, e: int) -> int:
        """gen**e for any integer e."""
        return self.exp[e % self.order]

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def element(self, value: int) -> "FieldElem":
        return FieldElem(self, value)

    def __repr__(self):
        return f"FieldCtx(k={self.k}, modulus={self.modulus:#b})"


@lru_cache(maxsize=None)
def field_ctx(k: int) -> FieldCtx:
    """Shared context for GF(2^k) with the default modulus."""
    return FieldCtx(k, DEFAULT_MODULI[k])


GF4 = field_ctx(2)
GF16 = field_ctx(4)


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.size:
            raise ValueError(f"value {self.value} out of range for GF(2^{self.ctx.k})")

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.ctx, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.ctx, self.ctx.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.ctx, self.ctx.div(self.value, other.value))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElem({format_elem(self.value, self.ctx)})"


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def inv(a: FieldElem) -> FieldElem:
    return FieldElem(a.ctx, a.ctx.inv(a.value))


def frobenius(a: FieldElem) -> FieldElem:
    """Squaring map x -> x^2."""
    return FieldElem(a.ctx, a.ctx.frobenius(a.value))


class Embedding:
    """Field homomorphism GF(2^a) -> GF(2^b) for a dividing b.

    The small field's basis element a (bit 1) is sent to the first power
    gen^(j*s), s = (2^b - 1)/(2^a - 1), that is a root of the small modulus;
    for GF(4) -> GF(16) that is gen^5.
    """

    def __init__(self, small: FieldCtx, big: FieldCtx):
        if big.k % small.k:
            raise UnsupportedEmbeddingError(f"GF(2^{small.k}) does not embed in GF(2^{big.k})")
        self.small = small
        self.big = big
        step = big.order // small.order
        for j in range(1, small.order + 1):
            root = big.alpha_pow(j * step) if small.k > 1 else 1
            if self._eval_modulus(root) == 0:
                break
        else:  # pragma: no cover - a root always exists
            raise UnsupportedEmbeddingError("no root of the small modulus found")
        self.root = root
        image = []
        for v in range(small.size):
            acc, p = 0, 1
            for bit in range(small.k):
                if v >> bit & 1:
                    acc ^= p
                p = big.mul(p, root)
            image.append(acc)
        self.table = tuple(image)
        self.inverse = {b: a for a, b in enumerate(image)}

    def _eval_modulus(self, x: int) -> int:
        acc = 0
        for bit in range(self.small.k, -1, -1):
            acc = self.big.mul(acc, x) ^ (self.small.modulus >> bit & 1)
        return acc

    def __call__(self, a: int) -> int:
        return self.table[a]

    def contains(self, b: int) -> bool:
        return b in self.inverse

    def pullback(self, b: int) -> int:
        """Inverse image of a subfield element; KeyError if b lies outside."""
        return self.inverse[b]


@lru_cache(maxsize=None)
def embedding(small: FieldCtx, big: FieldCtx) -> Embedding:
    return Embedding(small, big)


def embed(a: FieldElem, src: FieldCtx, dst: FieldCtx) -> FieldElem:
    if a.ctx is not src:
        raise FieldMismatchError(f"element lives in {a.ctx!r}, not {src!r}")
    return FieldElem(dst, embedding(src, dst)(a.value))


# -- text notation -----------------------------------------------------------

_GF4_NAMES = ("0", "1", "w", "w2")
_GF4_PARSE = {"0": 0, "1": 1, "w": 2, "w2": 3, "1+w": 3, "w+1": 3, "w^2": 3}


def format_elem(a: int, ctx: FieldCtx = GF4) -> str:
    if ctx.k == 2:
        return _GF4_NAMES[a]
    return format(a, "x")


def parse_elem(token: str, ctx: FieldCtx = GF4) -> int:
    token = token.strip().lower()
    if ctx.k == 2:
        try:
            return _GF4_PARSE[token]
        except KeyError:
            raise ValueError(f"not a GF(4) symbol: {token!r}") from None
    value = int(token, 16)
    if value >= ctx.size:
        raise ValueError(f"{token!r} out of range for GF(2^{ctx.k})")
    return value


def format_vec(v, ctx: FieldCtx = GF4) -> str:
    return " ".join(format_elem(a, ctx) for a in v)


def parse_vec(text: str, ctx: FieldCtx = GF4) -> tuple:
    return tuple(parse_elem(t, ctx) for t in text.replace(",", " ").split())
