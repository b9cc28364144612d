"""Binary 2x2 sum-rank codes SR(C1, C2) over GF(4) and their decoders."""

from .codes import (
    DecodeOutcome,
    LinearCode,
    Received,
    Status,
    decode_bmd_exhaustive,
    decode_error_erasure_exhaustive,
    encode,
    make_bch,
    make_constant,
    make_generic,
    make_rs,
    min_distance_exhaustive,
    syndrome,
)
from .algdec import decode_algebraic
from .channel import enumerate_errors, sample_error
from .errors import ContractError, SrCodesError
from .gf import GF4, GF16, FieldCtx, FieldElem, field_ctx
from .srdec import (
    SrCode,
    SrDecodeReport,
    check_design_conditions,
    decode_ccq,
    decode_two_step,
    decode_two_step_symmetric,
    sr_unique_radius,
)
from .sumrank import SrWord, classify, phi, rank2, sr_min_distance_exhaustive, sr_weight

__version__ = "0.1.0"
