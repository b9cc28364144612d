"""Algebraic error/erasure decoding of RS and BCH codes over GF(4).

Both families are handled through one parity-check shape

    sum_i v_i * X_i^j * c_i = 0,   j = 0 .. N-1,

over a syndrome field F containing GF(4), with nonzero distinct locators
X_i and nonzero column multipliers v_i (N = designed distance - 1).

* narrow-sense BCH: F = GF(4^m), X_i = v_i = a^i.
* RS on points avoiding 0: F = GF(4), X_i = p_i, v_i = 1 / prod_{l != i} (p_i - p_l).
* RS on points containing 0: a locator would vanish, so the points are
  moved by t -> 1/(t - s) with s in GF(16) outside GF(4).  Then
  X_i = 1/(p_i - s) and v_i = X_i^(k-1) / prod_{l != i} (X_i - X_l).

Decoding zero-fills the erasures, folds the erasure locator into the
syndrome polynomial and solves the key equation with the extended
Euclidean algorithm; a root search over the locators and Forney's formula
finish the job.  Every multiplication and inversion goes through a
:class:`CountingField` so callers can read off the field-operation count.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .codes import DecodeOutcome, LinearCode, Received, Status, _success, syndrome
from .errors import CodeError, ContractError, SrCodesError
from .gf import GF4, GF16, FieldCtx, embedding, field_ctx, format_elem


class KeyEquationFailure(SrCodesError):
    """The key equation has no solution with few enough errors."""


class CountingField:
    """Thin wrapper over a FieldCtx that counts multiplications and inversions."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.ops = 0

    def mul(self, a: int, b: int) -> int:
        self.ops += 1
        return self.ctx.mul(a, b)

    def inv(self, a: int) -> int:
        self.ops += 1
        return self.ctx.inv(a)


# -- polynomials: coefficient lists, lowest degree first -------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p) -> int:
    p = _trim(p)
    return len(p) - 1 if p else -1


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) ^ (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(F, a, b):
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= F.mul(x, y)
    return _trim(out)


def poly_divmod(F, a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 1)
    lead_inv = F.inv(b[-1])
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], lead_inv)
        q[shift] = c
        for j, y in enumerate(b):
            if y:
                a[shift + j] ^= F.mul(c, y)
        a = _trim(a)
    return _trim(q), a


def poly_eval(F, p, x):
    acc = 0
    for c in reversed(p):
        acc = F.mul(acc, x) ^ c
    return acc


def poly_deriv(p):
    # Characteristic 2: only odd-degree terms survive.
    return _trim([p[i] if i % 2 else 0 for i in range(1, len(p))])


def poly_str(p, ctx: FieldCtx) -> str:
    terms = [f"{format_elem(c, ctx)}*z^{i}" for i, c in enumerate(p) if c]
    return " + ".join(terms) if terms else "0"


# -- parity-check data -------------------------------------------------------------


@dataclass(frozen=True)
class AlternantForm:
    field: FieldCtx
    locators: tuple
    multipliers: tuple
    n_checks: int

    @property
    def designed_distance(self) -> int:
        return self.n_checks + 1


def _rs_form(C: LinearCode) -> AlternantForm:
    points = C.params["points"]
    n, k = C.n, C.k
    if 0 not in points:
        X = tuple(points)
        v = []
        for i, x in enumerate(X):
            prod = 1
            for l, y in enumerate(X):
                if l != i:
                    prod = GF4.mul(prod, x ^ y)
            v.append(GF4.inv(prod))
        return AlternantForm(GF4, X, tuple(v), n - k)
    F = GF16
    emb = embedding(GF4, F)
    s = F.gen  # order 15, so outside the GF(4) image
    X = tuple(F.inv(emb(p) ^ s) for p in points)
    v = []
    for i, x in enumerate(X):
        prod = 1
        for l, y in enumerate(X):
            if l != i:
                prod = F.mul(prod, x ^ y)
        v.append(F.div(F.pow(x, k - 1), prod))
    return AlternantForm(F, X, tuple(v), n - k)


def _bch_form(C: LinearCode) -> AlternantForm:
    m = C.params["m"]
    F = field_ctx(2 * m)
    alpha = F.alpha_pow(F.order // C.n)
    X = tuple(F.pow(alpha, i) for i in range(C.n))
    return AlternantForm(F, X, X, C.params["delta"] - 1)


def alternant_form(C: LinearCode) -> AlternantForm:
    """Parity-check data used by the decoder; checked against the generator once."""
    if "alternant" in C._cache:
        return C._cache["alternant"]
    if C.kind == "rs":
        form = _rs_form(C)
    elif C.kind == "bch":
        form = _bch_form(C)
    else:
        raise CodeError(f"no algebraic decoder for kind={C.kind!r}")
    F = form.field
    emb = embedding(GF4, F)
    for row in C.G:
        for j in range(form.n_checks):
            acc = 0
            for x, v, c in zip(form.locators, form.multipliers, row):
                acc ^= F.mul(F.mul(v, F.pow(x, j)), emb(c))
            if acc:  # pragma: no cover - construction bug guard
                raise CodeError("alternant parity checks do not annihilate G")
    C._cache["alternant"] = form
    return form


# -- key equation ------------------------------------------------------------------


@dataclass(frozen=True)
class KeyEquationState:
    syndromes: tuple
    erasure_locator: tuple
    error_locator: tuple | None = None
    evaluator: tuple | None = None
    m: int = 1

    @property
    def r(self) -> int:
        return deg(self.erasure_locator)


def solve_key_equation(state: KeyEquationState, d: int, F=None) -> KeyEquationState:
    """Sugiyama's extended-Euclid solution of  Lambda * Gamma * S = Omega  mod z^(d-1).

    Divides z^(d-1) by Gamma*S until the remainder degree drops below
    (d-1+r)/2.  Raises KeyEquationFailure if the resulting locator is not
    normalisable or has degree above (d-1-r)/2.
    """
    if F is None:
        F = CountingField(field_ctx(2 * state.m))
    N = d - 1
    r = state.r
    gamma = list(state.erasure_locator)
    S = list(state.syndromes)[:N]
    T = poly_mul(F, gamma, S)[:N]
    T = _trim(T)
    r_prev, r_cur = [0] * N + [1], T
    t_prev, t_cur = [], [1]
    while r_cur and 2 * deg(r_cur) >= N + r:
        q, rem = poly_divmod(F, r_prev, r_cur)
        r_prev, r_cur = r_cur, rem
        t_prev, t_cur = t_cur, poly_add(t_prev, poly_mul(F, q, t_cur))
    if not t_cur or t_cur[0] == 0:
        raise KeyEquationFailure("error locator has zero constant term")
    norm = F.inv(t_cur[0])
    lam = [F.mul(norm, c) for c in t_cur]
    omega = [F.mul(norm, c) for c in r_cur]
    if 2 * deg(lam) > N - r:
        raise KeyEquationFailure(f"locator degree {deg(lam)} exceeds (d-1-r)/2 with d={d}, r={r}")
    return replace(state, error_locator=tuple(lam), evaluator=tuple(_trim(omega)))


def decode_algebraic(C: LinearCode, y: Received, trace: list | None = None) -> DecodeOutcome:
    """Errors-and-erasures decoding for codes from make_rs / make_bch.

    Agrees with the exhaustive oracle whenever 2t + r < designed distance;
    anywhere else it returns either the right codeword or Failure.  When
    ``trace`` is a list, per-step polynomials are appended to it as text.
    """
    return decode_algebraic_counted(C, y, trace)[0]


def decode_algebraic_counted(C: LinearCode, y: Received, trace: list | None = None) -> tuple:
    """Like decode_algebraic, returning (outcome, field operations spent)."""
    form = alternant_form(C)
    d = form.designed_distance
    if len(y.symbols) != C.n:
        raise CodeError(f"word length {len(y.symbols)} != n={C.n}")
    erased = y.erased
    r = len(erased)
    if r >= d:
        raise ContractError(f"{r} erasures >= designed distance {d}")
    F = CountingField(form.field)
    emb = embedding(GF4, form.field)
    X, V = form.locators, form.multipliers

    def log(msg):
        if trace is not None:
            trace.append(msg)

    def fail(reason):
        log(f"failure: {reason}")
        return DecodeOutcome(Status.FAILURE, r_used=r, reason=reason), F.ops

    yz = [0 if i in erased else a for i, a in enumerate(y.symbols)]
    # S_j = sum_i v_i X_i^j y_i, accumulated by walking powers of X_i.
    S = [0] * (d - 1)
    for i, a in enumerate(yz):
        if a:
            term = F.mul(V[i], emb(a))
            for j in range(d - 1):
                S[j] ^= term
                term = F.mul(term, X[i])
    gamma = [1]
    for i in sorted(erased):
        gamma = poly_mul(F, gamma, [1, X[i]])
    log(f"syndromes: {poly_str(S, form.field)}")
    log(f"erasure locator: {poly_str(gamma, form.field)}")

    state = KeyEquationState(tuple(S), tuple(gamma), m=form.field.k // 2)
    try:
        state = solve_key_equation(state, d, F)
    except KeyEquationFailure as exc:
        return fail(str(exc))
    lam, omega = list(state.error_locator), list(state.evaluator)
    log(f"error locator: {poly_str(lam, form.field)}")
    log(f"evaluator: {poly_str(omega, form.field)}")

    inv_X = [F.inv(x) for x in X]
    errors = [i for i in range(C.n) if i not in erased and poly_eval(F, lam, inv_X[i]) == 0]
    if len(errors) != deg(lam):
        return fail(f"locator has {len(errors)} roots among the locators but degree {deg(lam)}")
    psi = poly_mul(F, lam, gamma)
    if omega and deg(omega) >= deg(psi):
        return fail("evaluator degree too large")
    dpsi = poly_deriv(psi)
    fix = list(yz)
    for i in sorted(set(errors) | erased):
        den = F.mul(V[i], poly_eval(F, dpsi, inv_X[i]))
        if den == 0:
            return fail("repeated errata locator")
        val = F.mul(X[i], F.mul(poly_eval(F, omega, inv_X[i]), F.inv(den)))
        if not emb.contains(val):
            return fail("error value outside GF(4)")
        fix[i] ^= emb.pullback(val)
    if any(syndrome(C, fix)):
        return fail("corrected word is not a codeword")
    log(f"errors at {sorted(i + 1 for i in errors)}, {F.ops} field ops")
    return _success(y.symbols, fix, erased), F.ops
