import itertools

import pytest
from hypothesis import given, strategies as st

from srcodes.errors import FieldMismatchError, UnsupportedEmbeddingError
from srcodes.gf import (
    DEFAULT_MODULI,
    GF4,
    GF16,
    FieldCtx,
    FieldElem,
    add,
    embed,
    embedding,
    field_ctx,
    format_vec,
    frobenius,
    inv,
    is_irreducible,
    mul,
    parse_elem,
    parse_vec,
)

ZERO, ONE, W, W2 = (FieldElem(GF4, v) for v in range(4))


def test_add_examples():
    assert add(ONE, W) == W2
    assert add(W2, W) == ONE
    for a in (ZERO, ONE, W, W2):
        assert add(a, a) == ZERO


def test_mul_examples():
    assert mul(W, W2) == ONE
    assert mul(W, W) == W2
    assert W2.value == 0b11
    for a in (ZERO, ONE, W, W2):
        assert mul(a, ONE) == a
        assert mul(a, ZERO) == ZERO


def test_inv_examples():
    assert inv(ONE) == ONE
    assert inv(W) == W2
    assert inv(W2) == W
    with pytest.raises(ZeroDivisionError):
        inv(ZERO)


def test_frobenius_examples():
    assert frobenius(ZERO) == ZERO
    assert frobenius(ONE) == ONE
    assert frobenius(W) == W2
    assert frobenius(W2) == W
    for a in (ZERO, ONE, W, W2):
        assert frobenius(frobenius(a)) == a


def test_omega_relations():
    assert W ** 3 == ONE
    assert W * W + W + ONE == ZERO


def test_distributivity_exhaustive():
    elems = (ZERO, ONE, W, W2)
    for a, b, c in itertools.product(elems, repeat=3):
        assert a * (b + c) == a * b + a * c


def test_context_mismatch():
    with pytest.raises(FieldMismatchError):
        ONE + FieldElem(GF16, 1)
    with pytest.raises(FieldMismatchError):
        mul(W, FieldElem(GF16, 2))


def test_default_moduli_irreducible_and_tables():
    for k, m in DEFAULT_MODULI.items():
        assert is_irreducible(m) and m.bit_length() == k + 1
        F = field_ctx(k)
        for a in range(1, F.size):
            assert F.exp[F.log[a]] == a
        assert F.exp[F.order] == 1
        assert len({F.exp[i] for i in range(F.order)}) == F.order


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldCtx(2, 0b101)  # x^2 + 1 = (x + 1)^2


def test_embed_gf4_into_gf16():
    assert embed(ZERO, GF4, GF16).value == 0
    assert embed(ONE, GF4, GF16).value == 1
    beta = GF16.gen
    w = embed(W, GF4, GF16).value
    assert w == GF16.pow(beta, 5)
    assert GF16.pow(w, 3) == 1 and w != 1
    assert embed(W2, GF4, GF16).value == GF16.mul(w, w)


def test_embed_homomorphism_exhaustive():
    for big in (GF16, field_ctx(6), field_ctx(8)):
        emb = embedding(GF4, big)
        for a, b in itertools.product(range(4), repeat=2):
            assert emb(a ^ b) == emb(a) ^ emb(b)
            assert emb(GF4.mul(a, b)) == big.mul(emb(a), emb(b))
            assert emb.pullback(emb(a)) == a


def test_embed_unsupported():
    with pytest.raises(UnsupportedEmbeddingError):
        embed(FieldElem(GF16, 3), GF16, field_ctx(6))


def test_text_notation():
    assert parse_vec("1 w2 w 0") == (1, 3, 2, 0)
    assert parse_elem("1+w") == 3
    assert format_vec((0, 1, 2, 3)) == "0 1 w w2"
    assert parse_elem("f", GF16) == 15
    with pytest.raises(ValueError):
        parse_elem("w3")


@given(st.sampled_from([2, 3, 4, 6, 8]), st.data())
def test_field_axioms(k, data):
    F = field_ctx(k)
    a, b, c = (data.draw(st.integers(0, F.size - 1)) for _ in range(3))
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.frobenius(a ^ b) == F.frobenius(a) ^ F.frobenius(b)
    if a:
        assert F.mul(a, F.inv(a)) == 1
