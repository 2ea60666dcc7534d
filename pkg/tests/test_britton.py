import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsgroups.britton import (
    AbImage,
    BrittonNF,
    BSParams,
    abelianize,
    nf_equal,
    nf_invert,
    nf_is_valid,
    nf_multiply,
    normalize,
)
from bsgroups.errors import DomainError, ExponentCapExceeded
from bsgroups.words import Word, parse_word

from helpers import insert_relator, rand_word

GRID = [BSParams(m, n) for m in (1, 2, 3) for n in (-3, -2, -1, 1, 2, 3) ]


def test_params_reject_zero():
    with pytest.raises(DomainError):
        BSParams(0, 3)
    with pytest.raises(DomainError):
        BSParams(2, 0)
    assert BSParams(4, -6).d == 2


def test_normalize_examples():
    p = BSParams(2, 3)
    nf = normalize(p, parse_word("t^-1 a^2 t"))
    assert nf == BrittonNF(3, ())
    assert str(nf) == "a^3"

    assert normalize(p, parse_word("a t t^-1 a^-1")).is_identity

    q = BSParams(1, 3)
    nf = normalize(q, parse_word("t a^-1 t^-1"))
    assert nf == BrittonNF(-1, ((1, 2), (-1, 0)))
    assert str(nf) == "a^-1 (t a^2) (t^-1)"
    assert str(BrittonNF()) == "1"


def test_nf_equal_examples():
    p = BSParams(2, 3)
    assert nf_equal(p, parse_word("t^-1 a^2 t"), parse_word("a^3"))
    assert not nf_equal(p, parse_word("a"), parse_word("t"))
    assert nf_equal(p, parse_word("[a^2, t]"), parse_word("a"))


def test_nf_multiply_example():
    p = BSParams(2, 3)
    x = normalize(p, parse_word("a"))
    y = normalize(p, parse_word("t^-1 a^2 t"))
    assert nf_multiply(p, x, y) == normalize(p, parse_word("a^4"))


def test_abelianize_examples():
    assert abelianize(BSParams(2, 3), parse_word("a")) == AbImage(0, 0, 1)
    assert abelianize(BSParams(2, 2), parse_word("a")) == AbImage(0, 1, 0)
    assert abelianize(BSParams(2, 4), parse_word("a^3")) == AbImage(0, 1, 2)


def test_soundness_random():
    rng = random.Random(42)
    for p in GRID:
        for _ in range(25):
            w = rand_word(rng)
            assert normalize(p, w * w.inverse()).is_identity
            assert normalize(p, insert_relator(rng, p, w)) == normalize(p, w)


def test_multiply_matches_normalize_of_product():
    rng = random.Random(43)
    for p in GRID:
        for _ in range(15):
            u, v = rand_word(rng), rand_word(rng)
            lhs = nf_multiply(p, normalize(p, u), normalize(p, v))
            assert lhs == normalize(p, u * v)


def test_invert_matches_normalize_of_inverse():
    rng = random.Random(44)
    for p in GRID:
        for _ in range(15):
            w = rand_word(rng)
            assert nf_invert(p, normalize(p, w)) == normalize(p, w.inverse())


def test_multiply_associative():
    rng = random.Random(45)
    p = BSParams(2, -3)
    for _ in range(30):
        x, y, z = (normalize(p, rand_word(rng)) for _ in range(3))
        assert nf_multiply(p, nf_multiply(p, x, y), z) == nf_multiply(p, x, nf_multiply(p, y, z))


def test_outputs_are_structurally_valid():
    rng = random.Random(46)
    for p in GRID:
        for _ in range(20):
            nf = normalize(p, rand_word(rng))
            assert nf_is_valid(p, nf)
            assert normalize(p, nf.to_word()) == nf


def test_m_equals_one_shape():
    # For m = 1 every t^-1 residue is 0 and pinch-freeness forces all
    # ascending letters before all descending ones: t^k a^l t^-r shape.
    rng = random.Random(47)
    for p in (BSParams(1, 3), BSParams(1, -2)):
        for _ in range(80):
            nf = normalize(p, rand_word(rng))
            seen_down = False
            for eps, r in nf.tail:
                if eps == -1:
                    seen_down = True
                    assert r == 0
                else:
                    assert not seen_down


def test_abelianize_factors_through_normalize():
    rng = random.Random(48)
    for p in GRID:
        for _ in range(10):
            w = rand_word(rng)
            assert abelianize(p, w) == abelianize(p, normalize(p, w).to_word())


def test_exponent_cap_triggers():
    p = BSParams(1, 2)
    w = parse_word("t^-40 a t^40")
    assert normalize(p, w) == BrittonNF(1 << 40, ())
    with pytest.raises(ExponentCapExceeded):
        normalize(p, w, max_bits=16)


@settings(max_examples=50)
@given(
    st.sampled_from(GRID),
    st.lists(
        st.tuples(st.sampled_from("at"), st.integers(-4, 4).filter(lambda e: e != 0)),
        max_size=8,
    ),
)
def test_normalize_idempotent(p, pairs):
    nf = normalize(p, Word.from_pairs(pairs))
    assert normalize(p, nf.to_word()) == nf
