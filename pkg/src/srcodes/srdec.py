"""Decoders for SR(C1, C2) built on Hamming-metric decoders of C1 and C2.

``decode_two_step`` decodes C2 once, then runs one error/erasure decode of
C1 with the support of the recovered C2 error as the erasure set.
``decode_ccq`` is the older baseline: after the same C2 step it tries three
candidate words against C1 and keeps the single consistent answer.  Both
return a :class:`SrDecodeReport` that records how many times each
constituent decoder ran and how long it took.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algdec import decode_algebraic
from .codes import (
    DecodeOutcome,
    LinearCode,
    Received,
    decode_bmd_exhaustive,
    decode_error_erasure_exhaustive,
)
from .errors import CodeError, ContractError
from .gf import GF4, W, W2, format_vec
from .sumrank import DEFAULT_PAIR_CAP, SrDistance, SrWord, sr_distance_bounds, sr_min_distance_exhaustive, sr_weight

ALGEBRAIC_KINDS = ("rs", "bch")


def ee_decoder(C: LinearCode, algebraic: bool = True) -> Callable[[Received], DecodeOutcome]:
    if algebraic and C.kind in ALGEBRAIC_KINDS:
        return lambda y: decode_algebraic(C, y)
    return lambda y: decode_error_erasure_exhaustive(C, y)


def bmd_decoder(C: LinearCode, algebraic: bool = True) -> Callable[[tuple], DecodeOutcome]:
    if algebraic and C.kind in ALGEBRAIC_KINDS:
        return lambda y: decode_algebraic(C, Received.plain(y))
    return lambda y: decode_bmd_exhaustive(C, y)


def _same_code(C1: LinearCode, C2: LinearCode) -> bool:
    return C1.n == C2.n and C1.k == C2.k and C1.H == C2.H


def sr_distance(C1: LinearCode, C2: LinearCode, cap: int = DEFAULT_PAIR_CAP) -> SrDistance:
    """d_sr by enumeration when affordable, else the best bracket available.

    For C1 == C2 the value is d(C) without enumeration: (a, a) with wt(a) = d
    has sum-rank weight d, and the weight identity bounds every other
    nonzero pair below by min(2 w1, 2 w2, max(w1, w2)) >= d.
    """
    if 4 ** (C1.k + C2.k) <= cap:
        return sr_min_distance_exhaustive(C1, C2, cap)
    if _same_code(C1, C2):
        return SrDistance(C1.d, C1.d if C1.d_exact else None, C1.d_exact)
    lo, hi = sr_distance_bounds(C1.d, C2.d)
    return SrDistance(lo, hi if C1.d_exact else None, False)


@dataclass(frozen=True, eq=False)
class SrCode:
    """SR(C1, C2) with its distance data and constituent decoders.

    ``dec1`` is the C1 error/erasure decoder and ``dec2`` the C2 BMD decoder
    used by the two-step procedure; ``bmd1`` and ``ee2`` serve the
    symmetric variant and the baseline.
    """

    C1: LinearCode
    C2: LinearCode
    dsr: SrDistance
    dec1: Callable
    dec2: Callable
    bmd1: Callable
    ee2: Callable
    identical: bool = False

    @classmethod
    def build(cls, C1: LinearCode, C2: LinearCode, cap: int = DEFAULT_PAIR_CAP, algebraic: bool = True) -> "SrCode":
        if C1.n != C2.n:
            raise CodeError(f"C1 has length {C1.n} but C2 has length {C2.n}")
        return cls(
            C1,
            C2,
            sr_distance(C1, C2, cap),
            dec1=ee_decoder(C1, algebraic),
            dec2=bmd_decoder(C2, algebraic),
            bmd1=bmd_decoder(C1, algebraic),
            ee2=ee_decoder(C2, algebraic),
            identical=_same_code(C1, C2),
        )

    @property
    def ell(self) -> int:
        return self.C1.n

    @property
    def binary_dimension(self) -> int:
        return 2 * (self.C1.k + self.C2.k)

    def two_step_applicable(self) -> bool:
        """d2 >= d_sr, certified for every value d_sr may take."""
        if self.identical or self.dsr.exact:
            return self.identical or self.C2.d >= self.dsr.lower
        return self.dsr.upper is not None and self.C2.d >= self.dsr.upper

    def symmetric_applicable(self) -> bool:
        """d1 >= d_sr."""
        if self.identical or self.dsr.exact:
            return self.identical or self.C1.d >= self.dsr.lower
        return self.dsr.upper is not None and self.C1.d >= self.dsr.upper

    def ccq_applicable(self) -> bool:
        """d2 >= d_sr and d1 >= (2/3) d_sr."""
        if self.identical:
            return True
        if self.dsr.exact:
            return self.C2.d >= self.dsr.lower and 3 * self.C1.d >= 2 * self.dsr.lower
        hi = self.dsr.upper
        return hi is not None and self.C2.d >= hi and 3 * self.C1.d >= 2 * hi


def sr_unique_radius(code) -> int:
    """floor((d_sr - 1)/2), from the exact value or else the lower bound.

    Accepts an SrCode, an SrDistance, an int or a (lower, upper) bracket.
    """
    if isinstance(code, SrCode):
        code = code.dsr
    if isinstance(code, SrDistance):
        lo = code.lower
    elif isinstance(code, int):
        lo = code
    else:
        lo = code[0]
    return max((lo - 1) // 2, 0)


def support(v) -> frozenset:
    return frozenset(i for i, a in enumerate(v) if a)


def _sub(a, b) -> tuple:
    return tuple(x ^ y for x, y in zip(a, b))


@dataclass
class SrDecodeReport:
    """Outcome of one sum-rank decode plus instrumentation.

    ``J`` holds 0-based positions; ``to_text`` prints them 1-based.
    """

    ok: bool
    a1: tuple | None = None
    a2: tuple | None = None
    e1: tuple | None = None
    e2: tuple | None = None
    stage: str = ""
    reason: str = ""
    J: frozenset = frozenset()
    t: int | None = None
    r: int | None = None
    calls_dec1: int = 0
    calls_dec2: int = 0
    time_dec1: float = 0.0
    time_dec2: float = 0.0
    candidates: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "success" if self.ok else "failure"

    @property
    def codeword(self) -> SrWord | None:
        return SrWord(self.a1, self.a2) if self.ok else None

    @property
    def error(self) -> SrWord | None:
        return SrWord(self.e1, self.e2) if self.ok else None

    def to_text(self) -> str:
        lines = [f"status={self.status}"]
        if self.ok:
            lines += [f"a1={format_vec(self.a1)}", f"a2={format_vec(self.a2)}"]
        else:
            lines += [f"stage={self.stage}", f"reason={self.reason}"]
        lines += [
            "J=" + ",".join(str(i + 1) for i in sorted(self.J)),
            f"t={'' if self.t is None else self.t}",
            f"r={'' if self.r is None else self.r}",
            f"calls_dec1={self.calls_dec1}",
            f"calls_dec2={self.calls_dec2}",
        ]
        return "\n".join(lines) + "\n"


class _Clock:
    """Accumulates decoder call counts and wall-clock time."""

    def __init__(self):
        self.calls = [0, 0]
        self.secs = [0.0, 0.0]

    def run(self, which: int, fn, arg):
        self.calls[which] += 1
        t0 = time.perf_counter()
        try:
            return fn(arg)
        finally:
            self.secs[which] += time.perf_counter() - t0

    def fill(self, report: SrDecodeReport) -> SrDecodeReport:
        report.calls_dec1, report.calls_dec2 = self.calls
        report.time_dec1, report.time_dec2 = self.secs
        return report


def _require(flag: bool, what: str, code: SrCode):
    if not flag:
        raise ContractError(
            f"{what} (d1={code.C1.d}, d2={code.C2.d}, d_sr={code.dsr}) is not certified for this code pair"
        )


def decode_two_step(code: SrCode, y: SrWord, check: bool = True) -> SrDecodeReport:
    """Decode C2 with its BMD decoder, then C1 with supp(e2) erased."""
    if check:
        _require(code.two_step_applicable(), "d2 >= d_sr", code)
    clock = _Clock()
    out2 = clock.run(1, code.dec2, y.v2)
    if not out2.ok:
        return clock.fill(SrDecodeReport(False, stage="C2", reason=out2.reason))
    a2, e2 = out2.codeword, out2.error
    J = support(e2)
    try:
        out1 = clock.run(0, code.dec1, Received.with_erasures(y.v1, J))
    except ContractError as exc:
        return clock.fill(SrDecodeReport(False, a2=a2, e2=e2, stage="C1", reason=str(exc), J=J, r=len(J)))
    if not out1.ok:
        return clock.fill(SrDecodeReport(False, a2=a2, e2=e2, stage="C1", reason=out1.reason, J=J, r=len(J)))
    a1 = out1.codeword
    assert code.C1.contains(a1) and code.C2.contains(a2)
    return clock.fill(SrDecodeReport(True, a1, a2, _sub(y.v1, a1), e2, J=J, t=out1.t_used, r=len(J)))


def decode_two_step_symmetric(code: SrCode, y: SrWord, check: bool = True) -> SrDecodeReport:
    """Mirror image: decode C1 first, then C2 with supp(e1) erased."""
    if check:
        _require(code.symmetric_applicable(), "d1 >= d_sr", code)
    clock = _Clock()
    out1 = clock.run(0, code.bmd1, y.v1)
    if not out1.ok:
        return clock.fill(SrDecodeReport(False, stage="C1", reason=out1.reason))
    a1, e1 = out1.codeword, out1.error
    J = support(e1)
    try:
        out2 = clock.run(1, code.ee2, Received.with_erasures(y.v2, J))
    except ContractError as exc:
        return clock.fill(SrDecodeReport(False, a1=a1, e1=e1, stage="C2", reason=str(exc), J=J, r=len(J)))
    if not out2.ok:
        return clock.fill(SrDecodeReport(False, a1=a1, e1=e1, stage="C2", reason=out2.reason, J=J, r=len(J)))
    a2 = out2.codeword
    assert code.C1.contains(a1) and code.C2.contains(a2)
    return clock.fill(SrDecodeReport(True, a1, a2, e1, _sub(y.v2, a2), J=J, t=out2.t_used, r=len(J)))


CCQ_SHIFTS = (1, W, W2)


def ccq_candidate(y1, e2, s: int) -> tuple:
    """y1 + s*e2: at positions where e1 = s*e2 the C1 error cancels."""
    return tuple(a ^ GF4.mul(s, b) for a, b in zip(y1, e2))


def decode_ccq(code: SrCode, y: SrWord, check: bool = True) -> SrDecodeReport:
    """Baseline: one C2 decode, then three BMD decodes of C1 candidates.

    A decoded a1 counts as consistent when the implied total error
    (y1 - a1) x + e2 x^2 lies within the unique radius.  Success needs
    exactly one distinct consistent a1.
    """
    if check:
        _require(code.ccq_applicable(), "d2 >= d_sr and d1 >= (2/3) d_sr", code)
    radius = sr_unique_radius(code)
    clock = _Clock()
    out2 = clock.run(1, code.dec2, y.v2)
    if not out2.ok:
        return clock.fill(SrDecodeReport(False, stage="C2", reason=out2.reason))
    a2, e2 = out2.codeword, out2.error
    consistent = {}
    tried = []
    for s in CCQ_SHIFTS:
        out = clock.run(0, code.bmd1, ccq_candidate(y.v1, e2, s))
        tried.append(out.codeword if out.ok else None)
        if out.ok and out.codeword not in consistent:
            if sr_weight(SrWord(_sub(y.v1, out.codeword), e2)) <= radius:
                consistent[out.codeword] = out
    if len(consistent) != 1:
        why = "no consistent candidate" if not consistent else f"{len(consistent)} distinct consistent candidates"
        return clock.fill(SrDecodeReport(False, a2=a2, e2=e2, stage="C1", reason=why, candidates=tried))
    (a1, out1), = consistent.items()
    return clock.fill(
        SrDecodeReport(True, a1, a2, _sub(y.v1, a1), e2, t=out1.t_used, r=0, candidates=tried)
    )


DECODERS = {
    "two-step": decode_two_step,
    "symmetric": decode_two_step_symmetric,
    "ccq": decode_ccq,
}


# -- design region -------------------------------------------------------------------


@dataclass(frozen=True)
class DesignReport:
    two_step_ok: bool
    ccq_ok: bool
    sufficient_d2_ge_2d1: bool
    delta1: tuple
    delta2: tuple

    def to_text(self) -> str:
        def iv(x):
            lo, hi = x
            return str(lo) if lo == hi else f"[{lo},{hi}]"

        return (
            f"two_step_ok={self.two_step_ok}\nccq_ok={self.ccq_ok}\n"
            f"sufficient_d2_ge_2d1={self.sufficient_d2_ge_2d1}\n"
            f"delta1={iv(self.delta1)}\ndelta2={iv(self.delta2)}\n"
        )


def check_design_conditions(d1: int, d2: int, dsr_bounds=None) -> DesignReport:
    """Which decoders are certified for (d1, d2) given d_sr or its bracket.

    ``dsr_bounds`` is an exact int, a (lower, upper) pair, an SrDistance, or
    None for the bracket (min(d1, 2 d2), 2 d1).  With only a bracket a
    condition counts as met when it holds for every d_sr in it.  delta1 and
    delta2 (d_i / d_sr) come back as (low, high) Fractions.
    """
    if dsr_bounds is None:
        lo, hi = sr_distance_bounds(d1, d2)
    elif isinstance(dsr_bounds, SrDistance):
        lo, hi = dsr_bounds.lower, dsr_bounds.upper if dsr_bounds.upper is not None else 2 * d1
    elif isinstance(dsr_bounds, int):
        lo = hi = dsr_bounds
    else:
        lo, hi = dsr_bounds
    sufficient = d2 >= 2 * d1
    return DesignReport(
        two_step_ok=d2 >= hi or sufficient,
        ccq_ok=d2 >= hi and 3 * d1 >= 2 * hi,
        sufficient_d2_ge_2d1=sufficient,
        delta1=(Fraction(d1, hi), Fraction(d1, lo)),
        delta2=(Fraction(d2, hi), Fraction(d2, lo)),
    )
