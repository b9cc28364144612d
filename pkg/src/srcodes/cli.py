"""Command-line interface: ``srcodes <subcommand> --config PAIR.cfg ...``.

The config file holds two sections, ``[C1]`` and ``[C2]``, each in the
key=value code format of :mod:`srcodes.codes`.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import random
import sys
import time
from dataclasses import dataclass, field

from .channel import ball_size, compositions, enumerate_errors, sample_error, trial_rng
from .codes import (
    DEFAULT_CAP,
    LinearCode,
    code_from_config,
    encode,
    make_constant,
    make_generic,
    make_rs,
    parse_sections,
)
from .errors import ConfigError, EnumerationCapError, SrCodesError
from .gf import parse_vec
from .srdec import (
    SrCode,
    check_design_conditions,
    decode_ccq,
    decode_two_step,
    sr_unique_radius,
)
from .sumrank import SrWord, sr_distance_bounds, sr_weight

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
CSV_COLUMNS = ("w", "trials", "ts_success", "ccq_success", "ts_calls1", "ccq_calls1", "ts_time_us", "ccq_time_us")


def load_pair(path: str, cap: int = DEFAULT_CAP) -> SrCode:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}") from None
    return pair_from_text(text, cap)


def pair_from_text(text: str, cap: int = DEFAULT_CAP) -> SrCode:
    sections = parse_sections(text)
    missing = [s for s in ("C1", "C2") if s not in sections]
    if missing:
        raise ConfigError(f"config lacks section(s) {', '.join('[' + s + ']' for s in missing)}")
    C1 = code_from_config(sections["C1"], cap)
    C2 = code_from_config(sections["C2"], cap)
    for name, C in (("C1", C1), ("C2", C2)):
        if C.k < 1:
            raise ConfigError(f"{name} must have dimension >= 1")
    if C1.n != C2.n:
        raise ConfigError(f"C1 has length {C1.n} but C2 has length {C2.n}")
    return SrCode.build(C1, C2)


def _random_codeword(C: LinearCode, rng: random.Random) -> tuple:
    return encode(C, [rng.randrange(4) for _ in range(C.k)])


# -- params ------------------------------------------------------------------------


def _frac(iv) -> str:
    lo, hi = iv
    return str(lo) if lo == hi else f"[{lo},{hi}]"


def _dsr_note(code: SrCode) -> str:
    if code.dsr.exact:
        return " (exact)"
    if code.identical:
        return " (C1 = C2, so d_sr = d1; d1 itself only bounded)"
    return " (bounds only)"


def params_report(code: SrCode) -> str:
    C1, C2 = code.C1, code.C2
    lo, hi = sr_distance_bounds(C1.d, C2.d)
    design = check_design_conditions(C1.d, C2.d, code.dsr)
    lines = [
        f"ell={code.ell}",
        f"k1={C1.k}",
        f"k2={C2.k}",
        f"d1={C1.d} ({C1.d_flag})",
        f"d2={C2.d} ({C2.d_flag})",
        f"binary_dim={code.binary_dimension}",
        f"dsr_bracket=[{lo},{hi}]",
        f"dsr={code.dsr}" + _dsr_note(code),
        f"radius={sr_unique_radius(code)}",
        f"delta1={_frac(design.delta1)}",
        f"delta2={_frac(design.delta2)}",
        f"two_step_ok={code.two_step_applicable()}",
        f"ccq_ok={code.ccq_applicable()}",
        f"sufficient_d2_ge_2d1={design.sufficient_d2_ge_2d1}",
    ]
    return "\n".join(lines) + "\n"


# -- verify ------------------------------------------------------------------------


@dataclass
class VerifyResult:
    radius: int
    w_max: int
    total: int = 0
    successes: int = 0
    failures_in_radius: int = 0
    failures_outside: int = 0
    ccq_rows: dict = field(default_factory=dict)  # w -> [instances, both ok, agree]

    @property
    def passed(self) -> bool:
        return self.failures_in_radius == 0


def verify_exhaustive(code: SrCode, w_max: int | None = None, compare_ccq: bool = False, seed: int = 0,
                      cap: int = DEFAULT_CAP) -> VerifyResult:
    """Run decode_two_step on the zero error and every error up to w_max.

    Each error is added to a codeword drawn from a seeded stream, so the
    decoders see nonzero codewords too.
    """
    radius = sr_unique_radius(code)
    w_max = radius if w_max is None else w_max
    if ball_size(code.ell, w_max) + 1 > cap:
        raise EnumerationCapError(
            f"{ball_size(code.ell, w_max)} error words up to weight {w_max}; use `simulate` instead"
        )
    res = VerifyResult(radius, w_max)
    ccq_ok = compare_ccq and code.ccq_applicable()
    rng = random.Random(seed)
    errors = itertools.chain([SrWord.zero(code.ell)], enumerate_errors(code.ell, w_max, cap))
    for e in errors:
        w = sr_weight(e)
        a1, a2 = _random_codeword(code.C1, rng), _random_codeword(code.C2, rng)
        y = SrWord(a1, a2) + e
        rep = decode_two_step(code, y, check=False)
        good = rep.ok and rep.a1 == a1 and rep.a2 == a2
        res.total += 1
        if good:
            res.successes += 1
        elif w <= radius:
            res.failures_in_radius += 1
        else:
            res.failures_outside += 1
        if ccq_ok and w <= radius:
            other = decode_ccq(code, y, check=False)
            row = res.ccq_rows.setdefault(w, [0, 0, 0])
            row[0] += 1
            row[1] += rep.ok and other.ok
            row[2] += rep.ok and other.ok and (rep.a1, rep.a2) == (other.a1, other.a2)
    return res


def verify_report(res: VerifyResult) -> str:
    lines = [
        f"radius={res.radius}",
        f"w_max={res.w_max}",
        f"errors={res.total}",
        f"successes={res.successes}",
        f"failures_within_radius={res.failures_in_radius}",
        f"failures_outside_radius={res.failures_outside}",
    ]
    if res.ccq_rows:
        lines.append("w,instances,both_success,agree")
        for w in sorted(res.ccq_rows):
            lines.append(",".join(str(x) for x in [w, *res.ccq_rows[w]]))
    return "\n".join(lines) + "\n"


# -- simulate ----------------------------------------------------------------------


def simulate(code: SrCode, weights, trials: int, seed: int, decoder: str = "both", warn=None) -> list:
    """Monte Carlo rows, one dict per achievable weight, in the order given.

    Trial c at weight w draws from ``trial_rng(seed, f"{w}/{c}")``.
    Timing columns are the only nondeterministic output.
    """
    if trials < 1:
        raise ConfigError("trials must be >= 1")
    run_ts = decoder in ("two-step", "both")
    run_ccq = decoder in ("ccq", "both") and code.ccq_applicable()
    if decoder in ("ccq", "both") and not run_ccq and warn:
        warn("CCQ preconditions (d2 >= d_sr, d1 >= 2/3 d_sr) not certified; ccq columns left empty")
    rows = []
    for w in weights:
        if w < 0 or not compositions(code.ell, w):
            if warn:
                warn(f"weight {w} is not achievable at length {code.ell}; skipped")
            continue
        ts = [0, 0, 0.0]
        cq = [0, 0, 0.0]
        for c in range(trials):
            rng = trial_rng(seed, f"{w}/{c}")
            a1, a2 = _random_codeword(code.C1, rng), _random_codeword(code.C2, rng)
            y = SrWord(a1, a2) + sample_error(code.ell, w, rng)
            for on, acc, fn in ((run_ts, ts, decode_two_step), (run_ccq, cq, decode_ccq)):
                if not on:
                    continue
                rep = fn(code, y, check=False)
                acc[0] += rep.ok and rep.a1 == a1 and rep.a2 == a2
                acc[1] += rep.calls_dec1
                acc[2] += rep.time_dec1 + rep.time_dec2
        row = {"w": w, "trials": trials}
        for name, on, acc in (("ts", run_ts, ts), ("ccq", run_ccq, cq)):
            row[f"{name}_success"] = f"{acc[0] / trials:.6f}" if on else ""
            row[f"{name}_calls1"] = f"{acc[1] / trials:.6f}" if on else ""
            row[f"{name}_time_us"] = f"{1e6 * acc[2] / trials:.3f}" if on else ""
        rows.append(row)
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# -- design-region search ----------------------------------------------------------


def candidate_codes(ell: int, seed: int = 0, generic_per_k: int = 2) -> list:
    """Small named codes of length ell used by the design-region search."""
    out = [(f"constant[{ell},1]", make_constant(ell))]
    if ell <= 4:
        points = (0, 1, 2, 3)[:ell]
        out += [(f"RS[{ell},{k}]", make_rs(points, k)) for k in range(2, ell)]
    if ell >= 2:
        out.append((f"parity[{ell},{ell - 1}]", make_generic([[1 if j in (i, ell - 1) else 0 for j in range(ell)]
                                                               for i in range(ell - 1)])))
    rng = random.Random(f"{seed}/design/{ell}")
    for k in range(1, min(ell, 4)):
        for j in range(generic_per_k):
            for _ in range(20):
                G = [[rng.randrange(4) for _ in range(ell)] for _ in range(k)]
                try:
                    C = make_generic(G)
                except SrCodesError:
                    continue
                if C.k == k:
                    out.append((f"generic[{ell},{k}]#{j}", C))
                    break
    return out


@dataclass
class Witness:
    ell: int
    name1: str
    name2: str
    d1: int
    d2: int
    dsr: int
    verify: VerifyResult | None = None

    @property
    def delta1(self):
        return check_design_conditions(self.d1, self.d2, self.dsr).delta1[0]

    def line(self) -> str:
        v = self.verify
        status = "unverified" if v is None else ("PASS" if v.passed else "FAIL")
        counts = "" if v is None else f" {v.successes}/{v.total} at radius {v.radius}"
        return (f"ell={self.ell} C1={self.name1} C2={self.name2} d1={self.d1} d2={self.d2} "
                f"dsr={self.dsr} delta1={self.delta1} verify={status}{counts}")


def design_region_search(ell_max: int = 8, ell_min: int = 2, seed: int = 0, verify: bool = True,
                         verify_cap: int = 200_000) -> list:
    """Code pairs with d2 >= d_sr and d1 < (2/3) d_sr, i.e. two-step only.

    Witnesses whose error ball exceeds ``verify_cap`` are listed unverified.
    """
    found = []
    for ell in range(ell_min, ell_max + 1):
        cands = candidate_codes(ell, seed)
        for (n1, C1), (n2, C2) in itertools.product(cands, repeat=2):
            code = SrCode.build(C1, C2)
            if not code.dsr.exact:
                continue
            dsr = code.dsr.lower
            if not (C2.d >= dsr and 3 * C1.d < 2 * dsr):
                continue
            wit = Witness(ell, n1, n2, C1.d, C2.d, dsr)
            if verify and ball_size(ell, sr_unique_radius(code)) <= verify_cap:
                wit.verify = verify_exhaustive(code)
            found.append(wit)
    return found


# -- argument handling -------------------------------------------------------------


def _weights(text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srcodes", description="Binary 2x2 sum-rank codes SR(C1, C2) over GF(4).")
    sub = p.add_subparsers(dest="command", required=True)

    def with_config(sp):
        sp.add_argument("--config", required=True, help="pair config with [C1] and [C2] sections")
        return sp

    with_config(sub.add_parser("params", help="code parameters and design-region status"))
    sp = with_config(sub.add_parser("encode", help="encode messages m1 (length k1) and m2 (length k2)"))
    sp.add_argument("m1")
    sp.add_argument("m2")
    sp.add_argument("--matrices", action="store_true", help="also print the 2x2 block dump")
    sp = with_config(sub.add_parser("decode", help="decode a received pair y1, y2"))
    sp.add_argument("y1")
    sp.add_argument("y2")
    sp.add_argument("--decoder", choices=("two-step", "ccq", "both"), default="two-step")
    sp = with_config(sub.add_parser("verify", help="exhaustive two-step check up to the radius or --wmax"))
    sp.add_argument("--wmax", type=int)
    sp.add_argument("--decoder", choices=("two-step", "ccq", "both"), default="two-step",
                    help="ccq/both add a two-step vs CCQ agreement table")
    sp.add_argument("--seed", type=int, default=0)
    sp = with_config(sub.add_parser("simulate", help="Monte Carlo success rates and call counts"))
    sp.add_argument("--weights", required=True, help="e.g. 1,2,3 or 1-4")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--decoder", choices=("two-step", "ccq", "both"), default="both")
    sp.add_argument("--csv", help="write CSV here instead of stdout")
    sp = sub.add_parser("design-region", help="search pairs decodable by two-step but outside CCQ")
    sp.add_argument("--lmax", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    return p


def _warn(msg: str):
    print(f"warning: {msg}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ConfigError, EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def _dispatch(args) -> int:
    out = sys.stdout
    if args.command == "design-region":
        t0 = time.perf_counter()
        found = design_region_search(args.lmax, seed=args.seed)
        for wit in found:
            out.write(wit.line() + "\n")
        out.write(f"witnesses={len(found)} elapsed_s={time.perf_counter() - t0:.1f}\n")
        return EXIT_FAIL if any(w.verify and not w.verify.passed for w in found) else EXIT_OK

    code = load_pair(args.config)
    if args.command == "params":
        out.write(params_report(code))
        return EXIT_OK
    if args.command == "encode":
        try:
            m1, m2 = parse_vec(args.m1), parse_vec(args.m2)
            word = SrWord(encode(code.C1, m1), encode(code.C2, m2))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        out.write(word.to_text())
        if args.matrices:
            out.write(word.matrix_dump())
        return EXIT_OK
    if args.command == "decode":
        try:
            y = SrWord(parse_vec(args.y1), parse_vec(args.y2))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if y.ell != code.ell:
            raise ConfigError(f"received word has length {y.ell}, code length is {code.ell}")
        fns = {"two-step": [decode_two_step], "ccq": [decode_ccq], "both": [decode_two_step, decode_ccq]}
        ok = True
        for fn in fns[args.decoder]:
            if len(fns[args.decoder]) > 1:
                out.write(f"[{fn.__name__.removeprefix('decode_').replace('_', '-')}]\n")
            try:
                rep = fn(code, y)
            except SrCodesError as exc:
                raise ConfigError(str(exc)) from None
            out.write(rep.to_text())
            ok &= rep.ok
        return EXIT_OK if ok else EXIT_FAIL
    if args.command == "verify":
        res = verify_exhaustive(code, args.wmax, compare_ccq=args.decoder != "two-step", seed=args.seed)
        out.write(verify_report(res))
        return EXIT_OK if res.passed else EXIT_FAIL
    if args.command == "simulate":
        rows = simulate(code, _weights(args.weights), args.trials, args.seed, args.decoder, warn=_warn)
        text = rows_to_csv(rows)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)
        return EXIT_OK
    raise AssertionError(args.command)  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
