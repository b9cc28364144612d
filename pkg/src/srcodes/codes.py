"""Linear codes over GF(4), constructors, and exhaustive reference decoders.

Vectors are tuples of ints 0..3 (see :mod:`srcodes.gf`).  Codebooks are
enumerated in message order: row ``m`` encodes the message whose j-th
symbol is ``(m >> 2j) & 3``, so row 0 is the zero codeword.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import linalg
from .errors import CodeError, ConfigError, EnumerationCapError
from .gf import GF4, embedding, field_ctx, format_vec, parse_vec

DEFAULT_CAP = 4 ** 12

EXACT = "exact"
DESIGNED = "designed"
BOUND = "bound"

# GF(4) multiplication table for vectorised scaling.
MUL4 = np.array([[GF4.mul(a, b) for b in range(4)] for a in range(4)], dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k, d] code over GF(4).

    ``G`` is the encoding matrix.  It is in reduced row-echelon form for
    generic, constant and BCH codes; RS codes keep the evaluation basis so a
    message is the coefficient vector of the evaluated polynomial.
    ``d_flag`` says how far ``d`` can be trusted: exact, designed (BCH lower
    bound) or bound (trivial lower bound).
    """

    n: int
    k: int
    G: tuple
    H: tuple
    d: int
    d_flag: str
    kind: str
    params: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def d_exact(self) -> bool:
        return self.d_flag == EXACT

    @property
    def radius(self) -> int:
        """Hamming unique-decoding radius from the flagged distance."""
        return (self.d - 1) // 2

    def with_exact_distance(self, cap: int = DEFAULT_CAP) -> "LinearCode":
        if self.d_exact:
            return self
        return replace(self, d=min_distance_exhaustive(self, cap), d_flag=EXACT, _cache=self._cache)

    def codebook(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        """All 4^k codewords as a (4^k, n) uint8 array."""
        if "codebook" not in self._cache:
            if 4 ** self.k > cap:
                raise EnumerationCapError(f"4^{self.k} codewords exceeds cap {cap}")
            cb = np.zeros((1, self.n), dtype=np.uint8)
            for row in self.G:
                row = np.asarray(row, dtype=np.uint8)
                cb = np.concatenate([cb ^ MUL4[c][row] for c in range(4)])
            self._cache["codebook"] = cb
        return self._cache["codebook"]

    def packed_codebook(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        """Codewords packed two bits per symbol into uint64 (n <= 32)."""
        if "packed" not in self._cache:
            cb = self.codebook(cap).astype(np.uint64)
            shifts = (2 * np.arange(self.n)).astype(np.uint64)
            self._cache["packed"] = np.bitwise_or.reduce(cb << shifts, axis=1)
        return self._cache["packed"]

    def contains(self, v: Sequence[int]) -> bool:
        return not any(syndrome(self, v))

    def __repr__(self):
        return f"LinearCode({self.kind} [{self.n},{self.k},{self.d}{'' if self.d_exact else '*'}]_4)"


def _parity_check(G_rref, n):
    return tuple(tuple(r) for r in linalg.nullspace(G_rref, n, GF4))


def _build(G, kind, d=None, d_flag=None, params=None, enc=None, cap=DEFAULT_CAP) -> LinearCode:
    """Assemble a code from a full-rank generator; ``enc`` overrides the encoder."""
    n = len(G[0])
    R, _ = linalg.rref(G, GF4)
    k = len(R)
    code = LinearCode(
        n=n,
        k=k,
        G=tuple(tuple(r) for r in (enc if enc is not None else R)),
        H=_parity_check(R, n),
        d=d if d is not None else 1,
        d_flag=d_flag if d_flag is not None else BOUND,
        kind=kind,
        params=dict(params or {}),
    )
    if d is None and 4 ** k <= cap:
        code = code.with_exact_distance(cap)
    return code


def make_rs(points: Sequence[int], k: int) -> LinearCode:
    """Evaluation code of polynomials of degree < k at distinct GF(4) points."""
    points = tuple(int(p) for p in points)
    n = len(points)
    if len(set(points)) != n or any(not 0 <= p < 4 for p in points):
        raise CodeError(f"RS points must be distinct GF(4) elements, got {points}")
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k={k}, n={n}")
    V = [[GF4.pow(p, j) for p in points] for j in range(k)]
    return _build(V, "rs", d=n - k + 1, d_flag=EXACT, params={"points": points}, enc=V)


def make_constant(n: int) -> LinearCode:
    """The [n, 1, n] repetition (constant) code."""
    if n < 1:
        raise CodeError("n must be positive")
    return _build([[1] * n], "constant", d=n, d_flag=EXACT)


def bch_extension_degree(n: int) -> int:
    """Smallest m <= 4 with n | 4^m - 1."""
    for m in range(1, 5):
        if n >= 2 and (4 ** m - 1) % n == 0:
            return m
    raise CodeError(f"n={n} does not divide 4^m - 1 for any m <= 4")


def cyclotomic_coset(b: int, n: int) -> tuple:
    """Coset of b under multiplication by 4 mod n."""
    out, x = [], b % n
    while x not in out:
        out.append(x)
        x = x * 4 % n
    return tuple(out)


def make_bch(n: int, delta: int) -> LinearCode:
    """Narrow-sense BCH code over GF(4) with zeros a^1..a^(delta-1).

    ``a`` is an n-th root of unity in GF(4^m), m minimal.
    """
    m = bch_extension_degree(n)
    if not 2 <= delta <= n:
        raise CodeError(f"need 2 <= delta <= n, got delta={delta}")
    big = field_ctx(2 * m)
    alpha = big.alpha_pow(big.order // n)
    zeros = sorted(set().union(*(cyclotomic_coset(b, n) for b in range(1, delta))))
    if len(zeros) >= n:
        raise CodeError(f"BCH({n}, {delta}) is the zero code")
    g = [1]
    for z in zeros:
        root = big.pow(alpha, z)
        # multiply by (x + root)
        g = [a ^ big.mul(root, b) for a, b in zip([0] + g, g + [0])]
    emb = embedding(GF4, big)
    try:
        g = [emb.pullback(c) for c in g]
    except KeyError:  # pragma: no cover - cosets guarantee GF(4) coefficients
        raise CodeError("generator polynomial left GF(4)") from None
    k = n - (len(g) - 1)
    shifts = [[0] * i + g + [0] * (k - 1 - i) for i in range(k)]
    return _build(
        shifts,
        "bch",
        d=delta,
        d_flag=DESIGNED,
        params={"delta": delta, "m": m, "zeros": tuple(zeros), "generator_poly": tuple(g)},
    )


def make_generic(G, cap: int = DEFAULT_CAP) -> LinearCode:
    """Code spanned by the rows of G; rank-deficient rows are dropped with a warning."""
    G = [[int(x) for x in row] for row in G]
    if not G or not G[0] or len({len(r) for r in G}) != 1:
        raise CodeError("G must be a non-empty rectangular matrix")
    if any(not 0 <= x < 4 for r in G for x in r):
        raise CodeError("G entries must be GF(4) elements 0..3")
    rk = linalg.rank(G, GF4)
    if rk == 0:
        raise CodeError("G spans the zero code")
    if rk < len(G):
        warnings.warn(f"generator matrix has rank {rk} < {len(G)} rows; dependent rows dropped", stacklevel=2)
    return _build(G, "generic", cap=cap)


def encode(C: LinearCode, msg: Sequence[int]) -> tuple:
    if len(msg) != C.k:
        raise CodeError(f"message length {len(msg)} != k={C.k}")
    return tuple(linalg.vec_mat(msg, C.G, GF4))


def syndrome(C: LinearCode, y: Sequence[int]) -> tuple:
    if len(y) != C.n:
        raise CodeError(f"word length {len(y)} != n={C.n}")
    return tuple(linalg.mat_vec(C.H, y, GF4))


def min_distance_exhaustive(C: LinearCode, cap: int = DEFAULT_CAP) -> int:
    cb = C.codebook(cap)
    if len(cb) < 2:
        raise CodeError("zero-dimensional code has no minimum distance")
    return int(np.count_nonzero(cb[1:], axis=1).min())


# -- decoding ----------------------------------------------------------------


class Status(enum.Enum):
    SUCCESS = "success"
    FAILURE = "failure"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class Received:
    """Received symbols plus an erasure mask (True = erased, symbol ignored)."""

    symbols: tuple
    erasures: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(a) for a in self.symbols))
        object.__setattr__(self, "erasures", tuple(bool(e) for e in self.erasures))
        if len(self.symbols) != len(self.erasures):
            raise ValueError("erasure mask length differs from symbol vector length")

    @classmethod
    def plain(cls, symbols: Sequence[int]) -> "Received":
        return cls(tuple(symbols), (False,) * len(symbols))

    @classmethod
    def with_erasures(cls, symbols: Sequence[int], J) -> "Received":
        J = set(J)
        return cls(tuple(symbols), tuple(i in J for i in range(len(symbols))))

    @property
    def erased(self) -> frozenset:
        return frozenset(i for i, e in enumerate(self.erasures) if e)

    @property
    def r(self) -> int:
        return sum(self.erasures)


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of a Hamming-metric decode.

    On success ``codeword + error`` equals the received symbols everywhere,
    erased positions included (the error there is the fill-in difference).
    """

    status: Status
    codeword: tuple | None = None
    error: tuple | None = None
    t_used: int | None = None
    r_used: int = 0
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status is Status.SUCCESS


def _success(symbols, codeword, erased):
    codeword = tuple(int(c) for c in codeword)
    error = tuple(a ^ b for a, b in zip(symbols, codeword))
    t = sum(1 for i, e in enumerate(error) if e and i not in erased)
    return DecodeOutcome(Status.SUCCESS, codeword, error, t, len(erased))


def _pack(v) -> int:
    out = 0
    for i, a in enumerate(v):
        out |= int(a) << (2 * i)
    return out


_ODD = 0x5555555555555555


def _distances(C: LinearCode, symbols, keep, cap) -> np.ndarray:
    """Hamming distance from every codeword to ``symbols`` on positions in ``keep``."""
    if C.n <= 32:
        mask = 0
        for i in keep:
            mask |= 1 << (2 * i)
        x = C.packed_codebook(cap) ^ np.uint64(_pack(symbols))
        nz = (x | (x >> np.uint64(1))) & np.uint64(mask & _ODD)
        return np.bitwise_count(nz).astype(np.int64)
    cb = C.codebook(cap)
    keep = sorted(keep)
    return np.count_nonzero(cb[:, keep] != np.asarray(symbols, dtype=np.uint8)[keep], axis=1)


def decode_bmd_exhaustive(C: LinearCode, y: Sequence[int], cap: int = DEFAULT_CAP) -> DecodeOutcome:
    """Nearest codeword if it lies within floor((d-1)/2), else Failure."""
    if len(y) != C.n:
        raise CodeError(f"word length {len(y)} != n={C.n}")
    dist = _distances(C, y, range(C.n), cap)
    t = int(dist.min())
    if t > C.radius:
        return DecodeOutcome(Status.FAILURE, t_used=t, reason=f"nearest codeword at distance {t} > radius {C.radius}")
    hits = np.flatnonzero(dist == t)
    assert len(hits) == 1, "two codewords inside the unique-decoding radius"
    return _success(y, C.codebook(cap)[hits[0]], frozenset())


def decode_error_erasure_exhaustive(
    C: LinearCode, y: Received, max_errors: int | None = None, cap: int = DEFAULT_CAP
) -> DecodeOutcome:
    """Nearest codeword on the non-erased positions.

    Failure if the nearest codeword needs more than ``max_errors`` errors.
    Otherwise Success whenever 2t + r < d; outside that region a unique
    nearest codeword is still returned and ties are reported as Ambiguous.
    """
    if len(y.symbols) != C.n:
        raise CodeError(f"word length {len(y.symbols)} != n={C.n}")
    erased = y.erased
    r = len(erased)
    keep = [i for i in range(C.n) if i not in erased]
    dist = _distances(C, y.symbols, keep, cap)
    t = int(dist.min())
    hits = np.flatnonzero(dist == t)
    if max_errors is not None and t > max_errors:
        return DecodeOutcome(Status.FAILURE, t_used=t, r_used=r, reason=f"t={t} exceeds max_errors={max_errors}")
    if 2 * t + r < C.d:
        assert len(hits) == 1, "uniqueness violated inside 2t + r < d"
    elif len(hits) > 1:
        return DecodeOutcome(Status.AMBIGUOUS, t_used=t, r_used=r, reason=f"{len(hits)} codewords tie at t={t}")
    return _success(y.symbols, C.codebook(cap)[hits[0]], erased)


# -- config text format --------------------------------------------------------


def _fmt_matrix(rows) -> str:
    return ";".join(format_vec(r) for r in rows)


def code_to_config(C: LinearCode) -> str:
    lines = [f"kind={C.kind}", f"n={C.n}", f"k={C.k}"]
    if C.kind == "rs":
        lines.append(f"points={format_vec(C.params['points'])}")
    if C.kind == "bch":
        lines.append(f"delta={C.params['delta']}")
    lines.append(f"G={_fmt_matrix(C.G)}")
    return "\n".join(lines) + "\n"


def parse_kv(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"expected key=value, got {line!r}")
        out[key.strip()] = value.strip()
    return out


def code_from_config(kv: dict, cap: int = DEFAULT_CAP) -> LinearCode:
    """Build a code from parsed key=value pairs; a given G must match exactly."""
    try:
        kind = kv.get("kind", "generic")
        G = [parse_vec(r) for r in kv["G"].split(";")] if "G" in kv else None
        if kind == "rs":
            points = parse_vec(kv["points"])
            C = make_rs(points, int(kv["k"]))
        elif kind == "bch":
            C = make_bch(int(kv["n"]), int(kv["delta"]))
        elif kind == "constant":
            C = make_constant(int(kv["n"]))
        elif kind == "generic":
            if G is None:
                raise ConfigError("generic code needs G=")
            C = make_generic(G, cap=cap)
        else:
            raise ConfigError(f"unknown code kind {kind!r}")
    except KeyError as exc:
        raise ConfigError(f"missing key {exc.args[0]!r} for kind={kv.get('kind')}") from None
    except (CodeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc
    if "n" in kv and int(kv["n"]) != C.n:
        raise ConfigError(f"n={kv['n']} disagrees with constructed length {C.n}")
    if "k" in kv and kind != "rs" and int(kv["k"]) != C.k:
        raise ConfigError(f"k={kv['k']} disagrees with constructed dimension {C.k}")
    if G is not None and kind != "generic" and tuple(map(tuple, G)) != C.G:
        raise ConfigError("stored G does not match the reconstructed generator matrix")
    return C


def parse_sections(text: str) -> dict:
    """Split ``[C1]`` / ``[C2]`` sections into key=value dicts."""
    sections, current = {}, None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            sections[current] = []
            continue
        if current is None:
            raise ConfigError(f"content before first section: {line!r}")
        sections[current].append(line)
    return {name: parse_kv("\n".join(lines)) for name, lines in sections.items()}
