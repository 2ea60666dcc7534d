import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsgroups.errors import ExponentCapExceeded, ParseError
from bsgroups.words import (
    Commutator,
    Conjugate,
    ExpSums,
    Gen,
    Power,
    Product,
    Word,
    eval_expr,
    exp_sums,
    free_reduce,
    parse_expr,
    parse_word,
    pretty_print,
)

word_pairs = st.lists(
    st.tuples(st.sampled_from("at"), st.integers(-4, 4).filter(lambda e: e != 0)),
    max_size=10,
)


def test_free_reduce_examples():
    assert free_reduce(Word.from_pairs([("a", 1), ("t", 1), ("t", -1), ("a", -1)])).is_identity
    assert free_reduce(Word.from_pairs([("a", 2), ("a", -1)])) == Word.from_pairs([("a", 1)])
    w = Word.from_pairs([("a", 1), ("t", 1), ("a", 1)])
    assert free_reduce(w) == w


@settings(max_examples=50)
@given(word_pairs)
def test_free_reduce_idempotent(pairs):
    w = free_reduce(Word.from_pairs(pairs))
    assert free_reduce(w) == w


@settings(max_examples=50)
@given(word_pairs)
def test_word_times_inverse_reduces_to_identity(pairs):
    w = Word.from_pairs(pairs)
    assert free_reduce(w * w.inverse()).is_identity
    assert free_reduce(w.inverse() * w).is_identity


def test_exp_sums_examples():
    assert exp_sums(Word.from_pairs([])) == ExpSums(0, 0)
    comm = parse_word("[a, t]")
    assert exp_sums(comm) == ExpSums(0, 0)
    assert exp_sums(parse_word("t^-1 a^2 t")) == ExpSums(sigma_a=2, sigma_t=0)


@settings(max_examples=50)
@given(word_pairs, word_pairs)
def test_exp_sums_additive(p1, p2):
    u, v = Word.from_pairs(p1), Word.from_pairs(p2)
    su, sv, sw = exp_sums(u), exp_sums(v), exp_sums(free_reduce(u * v))
    assert sw == ExpSums(su.sigma_a + sv.sigma_a, su.sigma_t + sv.sigma_t)


def test_parse_structure():
    assert parse_expr("a") == Gen("a")
    assert parse_expr("[a^2, t]") == Commutator(Power(Gen("a"), 2), Gen("t"))
    e = parse_expr("t^-1 a^2 t")
    assert e == Product((Power(Gen("t"), -1), Power(Gen("a"), 2), Gen("t")))
    # uppercase shorthand for inverses
    assert eval_expr(parse_expr("A T")) == Word.from_pairs([("a", -1), ("t", -1)])
    assert parse_expr("ta") == Product((Gen("t"), Gen("a")))


def test_parse_errors_carry_position():
    for bad in ["a^", "[a t", "b", "(a", "a^x", "]"]:
        with pytest.raises(ParseError) as exc:
            parse_expr(bad)
        assert exc.value.position >= 0


def test_eval_examples():
    assert eval_expr(parse_expr("[a, t]")) == parse_word("a^-1 t^-1 a t")
    assert eval_expr(Power(Gen("a"), 0)).is_identity
    lhs = eval_expr(parse_expr("[t, a]"))
    rhs = eval_expr(parse_expr("[a, t]")).inverse()
    assert free_reduce(lhs) == free_reduce(rhs)


def test_conjugate_expands():
    e = Conjugate(Gen("a"), Gen("t"))
    assert eval_expr(e) == parse_word("t^-1 a t")


def rand_expr(rng, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return Gen(rng.choice("at"))
    kind = rng.randrange(3)
    if kind == 0:
        return Power(rand_expr(rng, depth - 1), rng.choice([-2, -1, 2, 3]))
    if kind == 1:
        return Product(tuple(rand_expr(rng, depth - 1) for _ in range(rng.randrange(1, 4))))
    return Commutator(rand_expr(rng, depth - 1), rand_expr(rng, depth - 1))


def test_eval_inverse_pair_is_identity():
    rng = random.Random(7)
    for _ in range(40):
        e = rand_expr(rng)
        w = eval_expr(Product((e, Power(e, -1))))
        assert w.is_identity


def _flatten(e):
    if isinstance(e, Product):
        out = []
        for f in e.factors:
            g = _flatten(f)
            if isinstance(g, Product):
                out.extend(g.factors)
            else:
                out.append(g)
        if len(out) == 1:
            return out[0]
        return Product(tuple(out))
    if isinstance(e, Power):
        return Power(_flatten(e.base), e.exp)
    if isinstance(e, Commutator):
        return Commutator(_flatten(e.left), _flatten(e.right))
    if isinstance(e, Conjugate):
        return Conjugate(_flatten(e.inner), _flatten(e.by))
    return e


def test_pretty_print_round_trip():
    rng = random.Random(11)
    for _ in range(60):
        e = rand_expr(rng)
        again = parse_expr(pretty_print(e))
        assert _flatten(again) == _flatten(e)


def test_commutator_exp_sums_vanish():
    rng = random.Random(3)
    for _ in range(30):
        e = Commutator(rand_expr(rng, 2), rand_expr(rng, 2))
        s = exp_sums(eval_expr(e))
        assert (s.sigma_a, s.sigma_t) == (0, 0)


def test_word_str_forms():
    assert str(Word.from_pairs([("t", -1), ("a", 2), ("t", 1)])) == "t^-1 a^2 t"
    assert str(Word.from_pairs([])) == "1"


def test_word_pow():
    w = parse_word("a t")
    assert w ** 3 == free_reduce(w * w * w)
    assert (w ** -1) == w.inverse()
    assert (w ** 0).is_identity


def test_exponent_cap():
    with pytest.raises(ExponentCapExceeded):
        parse_expr("a^123456789", max_bits=8)
    with pytest.raises(ExponentCapExceeded):
        eval_expr(Power(Gen("a"), 1 << 40), max_bits=16)
