"""Dense matrices over GF(2^k); rows are lists of ints."""

from __future__ import annotations

from .gf import FieldCtx


def rref(rows, ctx: FieldCtx):
    """Reduced row-echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    lead = 0
    for c in range(ncols):
        p = next((i for i in range(lead, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[lead], m[p] = m[p], m[lead]
        s = ctx.inv(m[lead][c])
        m[lead] = [ctx.mul(s, x) for x in m[lead]]
        for i in range(len(m)):
            f = m[i][c]
            if i != lead and f:
                m[i] = [x ^ ctx.mul(f, y) for x, y in zip(m[i], m[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(m):
            break
    return m[:lead], pivots


def rank(rows, ctx: FieldCtx) -> int:
    return len(rref(rows, ctx)[1]) if rows else 0


def nullspace(rows, ncols: int, ctx: FieldCtx):
    """Basis of {x : rows . x = 0}, one basis vector per free column."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    r, pivots = rref(rows, ctx)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = r[i][f]  # -x == x in characteristic 2
        basis.append(v)
    return basis


def vec_mat(v, rows, ctx: FieldCtx):
    """Row vector times matrix."""
    out = [0] * len(rows[0])
    for a, row in zip(v, rows):
        if a:
            out = [o ^ ctx.mul(a, x) for o, x in zip(out, row)]
    return out


def mat_vec(rows, v, ctx: FieldCtx):
    """Matrix times column vector."""
    out = []
    for row in rows:
        acc = 0
        for x, y in zip(row, v):
            acc ^= ctx.mul(x, y)
        out.append(acc)
    return out


def solve(rows, rhs, ctx: FieldCtx):
    """One solution x of rows . x = rhs, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    r, pivots = rref(aug, ctx)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x
