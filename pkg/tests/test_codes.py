import itertools
import random

import pytest

from srcodes import linalg
from srcodes.codes import (
    BOUND,
    DESIGNED,
    EXACT,
    Received,
    Status,
    code_from_config,
    code_to_config,
    cyclotomic_coset,
    decode_bmd_exhaustive,
    decode_error_erasure_exhaustive,
    encode,
    make_bch,
    make_constant,
    make_generic,
    make_rs,
    min_distance_exhaustive,
    parse_kv,
    parse_sections,
    syndrome,
)
from srcodes.errors import CodeError, ConfigError, EnumerationCapError
from srcodes.gf import GF4

W, W2 = 2, 3
PTS = (0, 1, W, W2)


def test_make_rs_examples():
    C = make_rs(PTS, 2)
    assert (C.n, C.k, C.d, C.d_flag) == (4, 2, 3, EXACT)
    assert make_rs(PTS, 4).d == 1 and make_rs(PTS, 4).k == 4
    assert make_rs(PTS, 1).d == 4
    with pytest.raises(CodeError):
        make_rs((0, 1, 1), 2)
    with pytest.raises(CodeError):
        make_rs((0, 1), 3)


def test_rs_is_mds():
    for n in range(1, 5):
        for k in range(1, n + 1):
            C = make_rs(PTS[:n], k)
            assert min_distance_exhaustive(C) == n - k + 1 == C.d


def test_make_bch_examples():
    C = make_bch(15, 5)
    assert set(C.params["zeros"]) == {1, 4, 2, 8, 3, 12}
    assert C.k == 9 and C.d == 5 and C.d_flag == DESIGNED
    assert cyclotomic_coset(1, 15) == (1, 4)
    assert make_bch(15, 2).k == 13
    assert make_bch(5, 2).n == 5
    assert make_bch(7, 2).params["m"] == 3
    for bad in ((11, 3), (13, 3), (15, 1), (15, 16)):
        with pytest.raises(CodeError):
            make_bch(*bad)


def test_bch_distance_at_least_designed():
    for n, delta in ((15, 5), (15, 7), (5, 3), (17, 5), (21, 5), (9, 3)):
        C = make_bch(n, delta)
        if 4 ** C.k <= 4 ** 9:
            assert min_distance_exhaustive(C) >= delta


def test_make_generic_examples():
    assert make_generic([[int(i == j) for j in range(5)] for i in range(5)]).d == 1
    assert make_generic([[1, 1, 1, 1]]).d == 4
    C = make_generic([[1, 0, 1], [0, 1, W]])
    assert (C.n, C.k, C.d, C.d_flag) == (3, 2, 2, EXACT)
    with pytest.warns(UserWarning):
        C = make_generic([[1, 0, 1], [W, 0, W]])
    assert C.k == 1
    with pytest.raises(CodeError):
        make_generic([[0, 0]])


def test_large_generic_gets_bound_flag():
    C = make_generic([[int(i == j) for j in range(8)] for i in range(7)], cap=4 ** 5)
    assert C.d_flag == BOUND and C.d == 1


def test_encode_examples():
    rs = make_rs(PTS, 2)
    assert encode(rs, (0, 0)) == (0, 0, 0, 0)
    # f(t) = 1 + w t
    assert encode(rs, (1, W)) == (1, W2, W, 0)
    assert encode(make_constant(4), (W,)) == (W, W, W, W)
    with pytest.raises(CodeError):
        encode(rs, (1,))


def test_generator_parity_check_relations():
    rng = random.Random(3)
    codes = [make_rs(PTS, 2), make_rs((1, W, W2), 2), make_constant(5), make_bch(15, 5), make_bch(63, 7),
             make_generic([[1, 0, 1], [0, 1, W]])]
    for C in codes:
        assert linalg.rank(list(C.G), GF4) == C.k
        assert linalg.rank(list(C.H), GF4) == C.n - C.k
        for g in C.G:
            assert not any(syndrome(C, g))
        for _ in range(10):
            assert C.contains(encode(C, [rng.randrange(4) for _ in range(C.k)]))


def test_syndrome_examples():
    rs = make_rs(PTS, 2)
    assert syndrome(rs, encode(rs, (1, W))) == (0, 0)
    assert syndrome(rs, (0, 0, 0, 0)) == (0, 0)
    assert any(syndrome(rs, (1, W2, W2, 0)))


def test_bmd_examples():
    C = make_constant(4)
    out = decode_bmd_exhaustive(C, (W, W, 0, W))
    assert out.status is Status.SUCCESS and out.codeword == (W, W, W, W) and out.error == (0, 0, W, 0)
    assert decode_bmd_exhaustive(C, (W, W, 0, 0)).status is Status.FAILURE
    out = decode_bmd_exhaustive(C, (1, 1, 1, 1))
    assert out.ok and out.error == (0, 0, 0, 0)


def test_error_erasure_examples():
    rs = make_rs(PTS, 2)
    out = decode_error_erasure_exhaustive(rs, Received.with_erasures((1, W2, 0, 0), {2}))
    assert out.ok and out.codeword == (1, W2, W, 0) and out.t_used == 0 and out.r_used == 1
    # codeword + error reproduces the filled word
    assert tuple(a ^ b for a, b in zip(out.codeword, out.error)) == (1, W2, 0, 0)
    rep3 = make_constant(3)
    out = decode_error_erasure_exhaustive(rep3, Received.with_erasures((1, W, 0), {2}))
    assert out.status is Status.AMBIGUOUS and out.t_used == 1
    same = decode_error_erasure_exhaustive(rs, Received.plain((W, W, 0, W)))
    assert same.codeword == decode_bmd_exhaustive(rs, (W, W, 0, W)).codeword
    out = decode_error_erasure_exhaustive(rep3, Received.plain((1, 1, W)), max_errors=0)
    assert out.status is Status.FAILURE


def test_cap_enforced():
    with pytest.raises(EnumerationCapError):
        make_bch(15, 5).codebook(cap=4 ** 8)


def _error_vectors(n, t):
    for supp in itertools.combinations(range(n), t):
        for vals in itertools.product((1, 2, 3), repeat=t):
            e = [0] * n
            for p, v in zip(supp, vals):
                e[p] = v
            yield e


@pytest.mark.parametrize("C", [make_rs(PTS, 2), make_rs(PTS, 1), make_constant(5), make_rs((1, W, W2), 1),
                               make_generic([[1, 1, 0, 1, W, 0], [0, 1, 1, W2, 0, 1]])],
                         ids=lambda C: repr(C))
def test_bmd_and_error_erasure_recover_everything_in_region(C):
    rng = random.Random(5)
    for t in range(C.radius + 1):
        for e in _error_vectors(C.n, t):
            c = encode(C, [rng.randrange(4) for _ in range(C.k)])
            y = tuple(a ^ b for a, b in zip(c, e))
            assert decode_bmd_exhaustive(C, y).codeword == c
    for r in range(C.d):
        for J in itertools.combinations(range(C.n), r):
            keep = [i for i in range(C.n) if i not in J]
            for t in range((C.d - 1 - r) // 2 + 1):
                for sub in itertools.combinations(keep, t):
                    for vals in itertools.product((1, 2, 3), repeat=t):
                        c = encode(C, [rng.randrange(4) for _ in range(C.k)])
                        y = list(c)
                        for p, v in zip(sub, vals):
                            y[p] ^= v
                        for p in J:
                            y[p] = rng.randrange(4)
                        out = decode_error_erasure_exhaustive(C, Received.with_erasures(y, J))
                        assert out.ok and out.codeword == c and out.t_used == t


def test_config_round_trip():
    for C in (make_rs(PTS, 2), make_bch(15, 5), make_constant(4), make_generic([[1, 0, 1], [0, 1, W]])):
        D = code_from_config(parse_kv(code_to_config(C)))
        assert (D.kind, D.n, D.k, D.G, D.H) == (C.kind, C.n, C.k, C.G, C.H)


def test_config_errors():
    with pytest.raises(ConfigError):
        code_from_config({"kind": "rs", "k": "2"})
    with pytest.raises(ConfigError):
        code_from_config({"kind": "nope"})
    with pytest.raises(ConfigError):
        code_from_config({"kind": "bch", "n": "11", "delta": "3"})
    with pytest.raises(ConfigError):
        code_from_config({"kind": "constant", "n": "4", "G": "1 1 1 w"})
    with pytest.raises(ConfigError):
        parse_kv("no equals sign")
    with pytest.raises(ConfigError):
        parse_sections("n=4\n[C1]\n")
    assert parse_sections("[C1]\nkind=constant # comment\nn=3\n")["C1"] == {"kind": "constant", "n": "3"}
