"""Free words and commutator expressions over the two generators a, t.

Conventions used by the whole package:

  * a Word is a tuple of syllables (gen, exponent), gen in {"a", "t"},
    exponents nonzero, adjacent syllables on distinct generators;
  * [x, y] = x^-1 y^-1 x y and Conjugate(x, y) = y^-1 x y;
  * the text grammar accepts A and T as shorthand for a^-1 and t^-1:

        expr := term+
        term := atom ("^" int)?
        atom := "a" | "t" | "A" | "T" | "(" expr ")" | "[" expr "," expr "]"
        int  := "-"? digit+

All exponents are exact Python ints.  Rewriting elsewhere in the package can
make exponents explode (conjugation by t^k scales a-exponents by n^k), so a
bit cap is enforced wherever integers can grow; the default is 1,000,000 bits
and can be overridden per call or through the BS_MAX_BITS environment
variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ExponentCapExceeded, ParseError, WordSizeExceeded

DEFAULT_MAX_BITS = 1_000_000
ENV_MAX_BITS = "BS_MAX_BITS"

# Hard guard for eval of Power nodes: number of letters a single word may
# reach before we refuse to expand further.
_MAX_POWER_LETTERS = 2_000_000


def resolve_max_bits(value: int | None = None) -> int:
    """Pick the effective bit cap: explicit argument, else env, else default."""
    if value is None:
        raw = os.environ.get(ENV_MAX_BITS)
        value = int(raw) if raw else DEFAULT_MAX_BITS
    if value <= 0:
        raise ValueError("bit cap must be positive")
    return value


def _check_cap(x: int, cap: int) -> int:
    if x.bit_length() > cap:
        raise ExponentCapExceeded(x.bit_length(), cap)
    return x


# ---------------------------------------------------------------------------
# Words


def _reduce_pairs(pairs) -> list[tuple[str, int]]:
    # One streaming pass; popping a cancelled syllable exposes the previous
    # one to the next incoming syllable, which handles cascades.
    out: list[tuple[str, int]] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if gen not in ("a", "t"):
            raise ValueError(f"unknown generator {gen!r}")
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return out


@dataclass(frozen=True, slots=True)
class Word:
    """Freely reduced word; construct through from_pairs unless the tuple is
    already known to be reduced."""

    syllables: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_pairs(cls, pairs) -> "Word":
        return cls(tuple(_reduce_pairs(pairs)))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: "Word") -> "Word":
        return Word.from_pairs(self.syllables + other.syllables)

    def __pow__(self, k: int) -> "Word":
        return word_pow(self, k)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


def free_reduce(w) -> Word:
    """Freely reduce a Word or a raw iterable of (gen, exp) pairs.

    Idempotent: free_reduce(free_reduce(w)) == free_reduce(w).
    """
    pairs = w.syllables if isinstance(w, Word) else w
    return Word.from_pairs(pairs)


def word_pow(w: Word, k: int, max_bits: int | None = None) -> Word:
    cap = resolve_max_bits(max_bits)
    if k == 0 or w.is_identity:
        return Word()
    if len(w.syllables) == 1:
        g, e = w.syllables[0]
        return Word(((g, _check_cap(e * k, cap)),))
    if abs(k) * w.letter_count() > _MAX_POWER_LETTERS:
        raise WordSizeExceeded(
            f"power would reach about {abs(k) * w.letter_count()} letters"
        )
    base = w if k > 0 else w.inverse()
    result = Word()
    square = base
    k = abs(k)
    while k:
        if k & 1:
            result = result * square
        k >>= 1
        if k:
            square = square * square
    return result


@dataclass(frozen=True, slots=True)
class ExpSums:
    sigma_a: int
    sigma_t: int


def exp_sums(w: Word) -> ExpSums:
    """Exponent sums (sigma_a, sigma_t); a homomorphism to Z x Z."""
    sa = st = 0
    for g, e in w.syllables:
        if g == "a":
            sa += e
        else:
            st += e
    return ExpSums(sa, st)


# ---------------------------------------------------------------------------
# Commutator expressions


@dataclass(frozen=True, slots=True)
class Gen:
    name: str  # "a" or "t"


@dataclass(frozen=True, slots=True)
class Power:
    base: "CommExpr"
    exp: int


@dataclass(frozen=True, slots=True)
class Product:
    factors: tuple["CommExpr", ...]


@dataclass(frozen=True, slots=True)
class Commutator:
    left: "CommExpr"
    right: "CommExpr"


@dataclass(frozen=True, slots=True)
class Conjugate:
    inner: "CommExpr"
    by: "CommExpr"


CommExpr = Gen | Power | Product | Commutator | Conjugate


class _Parser:
    def __init__(self, text: str, cap: int):
        self.text = text
        self.pos = 0
        self.cap = cap

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_expr(self) -> CommExpr:
        terms = []
        while True:
            c = self.peek()
            if c == "" or c in ")],":
                break
            terms.append(self.parse_term())
        if not terms:
            raise self.error("empty expression")
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def parse_term(self) -> CommExpr:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            return Power(atom, self.parse_int())
        return atom

    def parse_atom(self) -> CommExpr:
        c = self.peek()
        if c == "a":
            self.pos += 1
            return Gen("a")
        if c == "t":
            self.pos += 1
            return Gen("t")
        if c == "A":
            self.pos += 1
            return Power(Gen("a"), -1)
        if c == "T":
            self.pos += 1
            return Power(Gen("t"), -1)
        if c == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if c == "[":
            self.pos += 1
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Commutator(left, right)
        raise self.error(f"unexpected character {c!r}" if c else "unexpected end of input")

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer")
        value = int(self.text[start : self.pos])
        _check_cap(value, self.cap)
        return value


def parse_expr(text: str, max_bits: int | None = None) -> CommExpr:
    """Parse the expression grammar; raises ParseError with a position."""
    parser = _Parser(text, resolve_max_bits(max_bits))
    expr = parser.parse_expr()
    if parser.peek() != "":
        raise parser.error("trailing input")
    return expr


def pretty_print(expr: CommExpr) -> str:
    """Render an expression in the input grammar.

    Conjugate has no surface syntax, so it prints as the expanded product
    (y^-1 x y); parsing the output of any conjugate-free expression gives
    back the same tree up to Product flattening.
    """
    if isinstance(expr, Gen):
        return expr.name
    if isinstance(expr, Power):
        return f"{_atomic(expr.base)}^{expr.exp}"
    if isinstance(expr, Product):
        return " ".join(_factor(f) for f in expr.factors)
    if isinstance(expr, Commutator):
        return f"[{pretty_print(expr.left)}, {pretty_print(expr.right)}]"
    if isinstance(expr, Conjugate):
        expanded = Product((Power(expr.by, -1), expr.inner, expr.by))
        return f"({pretty_print(expanded)})"
    raise TypeError(f"not a CommExpr: {expr!r}")


def _atomic(expr: CommExpr) -> str:
    if isinstance(expr, (Gen, Commutator)):
        return pretty_print(expr)
    return f"({pretty_print(expr)})"


def _factor(expr: CommExpr) -> str:
    if isinstance(expr, Product):
        return f"({pretty_print(expr)})"
    return pretty_print(expr)


def eval_expr(expr: CommExpr, max_bits: int | None = None) -> Word:
    """Evaluate an expression to a freely reduced Word."""
    cap = resolve_max_bits(max_bits)
    return Word(tuple(_eval(expr, cap)))


def _eval(expr: CommExpr, cap: int) -> list[tuple[str, int]]:
    if isinstance(expr, Gen):
        return [(expr.name, 1)]
    if isinstance(expr, Power):
        base = Word(tuple(_eval(expr.base, cap)))
        return list(word_pow(base, expr.exp, cap).syllables)
    if isinstance(expr, Product):
        out: list[tuple[str, int]] = []
        for f in expr.factors:
            out.extend(_eval(f, cap))
        return _reduce_pairs(out)
    if isinstance(expr, Commutator):
        x = _eval(expr.left, cap)
        y = _eval(expr.right, cap)
        return _reduce_pairs(_inv(x) + _inv(y) + x + y)
    if isinstance(expr, Conjugate):
        x = _eval(expr.inner, cap)
        y = _eval(expr.by, cap)
        return _reduce_pairs(_inv(y) + x + y)
    raise TypeError(f"not a CommExpr: {expr!r}")


def _inv(pairs: list[tuple[str, int]]) -> list[tuple[str, int]]:
    return [(g, -e) for g, e in reversed(pairs)]


def parse_word(text: str, max_bits: int | None = None) -> Word:
    """Parse and evaluate in one go; handy for CLI and tests."""
    return eval_expr(parse_expr(text, max_bits), max_bits)


def gamma_weight_lower_bound(expr: CommExpr):
    """Structural lower-central-series weight of an expression.

    Generators have weight 1, [x, y] adds the weights of x and y, products
    take the minimum over factors, powers and conjugates preserve weight.
    The value of the expression is guaranteed to lie in gamma_w for the
    returned w (None means the expression is structurally the identity, which
    lies in every term).
    """
    if isinstance(expr, Gen):
        return 1
    if isinstance(expr, Power):
        if expr.exp == 0:
            return None
        return gamma_weight_lower_bound(expr.base)
    if isinstance(expr, Product):
        weights = [gamma_weight_lower_bound(f) for f in expr.factors]
        finite = [w for w in weights if w is not None]
        return min(finite) if finite else None
    if isinstance(expr, Commutator):
        lw = gamma_weight_lower_bound(expr.left)
        rw = gamma_weight_lower_bound(expr.right)
        if lw is None or rw is None:
            return None
        return lw + rw
    if isinstance(expr, Conjugate):
        return gamma_weight_lower_bound(expr.inner)
    raise TypeError(f"not a CommExpr: {expr!r}")
