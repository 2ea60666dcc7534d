"""Shared generators and small oracles for the test suite."""

from __future__ import annotations

import random

from bsgroups.britton import BSParams
from bsgroups.words import Word


def rand_word(rng: random.Random, max_syllables: int = 8, max_exp: int = 3) -> Word:
    pairs = []
    for _ in range(rng.randrange(0, max_syllables + 1)):
        g = rng.choice("at")
        e = rng.choice([x for x in range(-max_exp, max_exp + 1) if x != 0])
        pairs.append((g, e))
    return Word.from_pairs(pairs)


def rand_letters(rng: random.Random, length: int) -> Word:
    """A word of exactly `length` single letters before free reduction."""
    pairs = [(rng.choice("at"), rng.choice((-1, 1))) for _ in range(length)]
    return Word.from_pairs(pairs)


def insert_relator(rng: random.Random, p: BSParams, w: Word) -> Word:
    """Splice t^-1 a^m t a^-n (or its inverse) into w at a random point."""
    relator = [("t", -1), ("a", p.m), ("t", 1), ("a", -p.n)]
    if rng.random() < 0.5:
        relator = [(g, -e) for g, e in reversed(relator)]
    letters = list(w.syllables)
    cut = rng.randrange(0, len(letters) + 1)
    return Word.from_pairs(letters[:cut] + relator + letters[cut:])


def commutator(u: Word, v: Word) -> Word:
    return u.inverse() * v.inverse() * u * v


def rand_gamma2_word(rng: random.Random, p: BSParams, central: int = 0) -> Word:
    """Product of commutators times a central a-power; lies in gamma_2."""
    w = Word.from_pairs((("a", (p.m - p.n) * central),))
    for _ in range(rng.randrange(2, 6)):
        u = rand_word(rng, max_syllables=3, max_exp=2)
        v = rand_word(rng, max_syllables=3, max_exp=2)
        w = w * commutator(u, v)
    return w
