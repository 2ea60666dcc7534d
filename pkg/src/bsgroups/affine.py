"""Affine representation of BS(1, n) over Z[1/n] and exact gamma weights.

BS(1, n) acts faithfully by affine maps of the line: a is the translation
x -> x + 1 and t is the scaling x -> x / n, so a word w with t-exponent sum
sigma_t becomes x -> n^{-sigma_t} x + b.  We store k = -sigma_t together
with the translation part b as data, which keeps the map faithful even in
the degenerate cases n = 1 (giving Z x Z) and n = -1 (the Klein bottle
group).  Composition follows function application, left factor applied
last:

    (k1, b1) * (k2, b2) = (k1 + k2, b1 + n^{k1} b2)

Conjugates t^l a^s t^-l land on the translation s / n^l, which is how the
lower central series becomes visible: for n not in {0, 1, 2} the i-th term
consists exactly of the translations by (n-1)^{i-1} Z[1/n], so the weight
of an element is read off p-adic valuations of the numerator at the primes
dividing n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .intmath import prime_factors, valuation
from .words import Word, resolve_max_bits, _check_cap


@dataclass(frozen=True, slots=True)
class ZnElement:
    """Element num / n^l of Z[1/n], canonical: l == 0 or n does not divide num."""

    num: int
    l: int = 0

    def __str__(self) -> str:
        return str(self.num) if self.l == 0 else f"{self.num}/n^{self.l}"


_ZERO = ZnElement(0, 0)


def zn_canon(n: int, num: int, l: int) -> ZnElement:
    if num == 0:
        return _ZERO
    if n in (1, -1):
        # n^l is a unit sign; fold it into the numerator
        if n == -1 and l % 2:
            num = -num
        return ZnElement(num, 0)
    while l > 0 and num % n == 0:
        num //= n
        l -= 1
    if l < 0:
        num *= n ** (-l)
        l = 0
    return ZnElement(num, l)


def zn_add(n: int, x: ZnElement, y: ZnElement, cap: int | None = None) -> ZnElement:
    if x.l < y.l:
        x, y = y, x
    num = x.num + y.num * n ** (x.l - y.l)
    if cap is not None:
        _check_cap(num, cap)
    return zn_canon(n, num, x.l)


def zn_neg(x: ZnElement) -> ZnElement:
    return ZnElement(-x.num, x.l)


def zn_scale_pow(n: int, x: ZnElement, k: int, cap: int | None = None) -> ZnElement:
    """Multiply by the unit n^k (k of either sign)."""
    if x.num == 0:
        return _ZERO
    out = zn_canon(n, x.num, x.l - k)
    if cap is not None:
        _check_cap(out.num, cap)
    return out


def zn_mul_int(n: int, x: ZnElement, c: int) -> ZnElement:
    return zn_canon(n, x.num * c, x.l)


def zn_divexact_int(n: int, x: ZnElement, c: int) -> ZnElement:
    if x.num % c != 0:
        raise DomainError(f"{x} is not divisible by {c} in Z[1/n]")
    return zn_canon(n, x.num // c, x.l)


@dataclass(frozen=True, slots=True)
class AffineElem:
    """The affine map x -> n^k x + b with k = -sigma_t."""

    k: int
    b: ZnElement

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and self.b.num == 0

    def __str__(self) -> str:
        return f"(k={self.k}, b={self.b})"


IDENTITY = AffineElem(0, _ZERO)


def affine_compose(n: int, g: AffineElem, h: AffineElem, max_bits: int | None = None) -> AffineElem:
    cap = resolve_max_bits(max_bits)
    return AffineElem(g.k + h.k, zn_add(n, g.b, zn_scale_pow(n, h.b, g.k, cap), cap))


def affine_invert(n: int, g: AffineElem, max_bits: int | None = None) -> AffineElem:
    cap = resolve_max_bits(max_bits)
    return AffineElem(-g.k, zn_neg(zn_scale_pow(n, g.b, -g.k, cap)))


def to_affine(n: int, w: Word, max_bits: int | None = None) -> AffineElem:
    """Image of a word under a -> x+1, t -> x/n; faithful as stored data."""
    if n == 0:
        raise DomainError("affine representation needs n != 0")
    cap = resolve_max_bits(max_bits)
    k = 0
    b = _ZERO
    for g, e in w.syllables:
        if g == "t":
            k -= e
        else:
            b = zn_add(n, b, zn_scale_pow(n, ZnElement(e, 0), k, cap), cap)
    return AffineElem(k, b)


def canonical_word(n: int, g: AffineElem, max_bits: int | None = None) -> Word:
    """Unique word t^k a^l t^-r (k, r >= 0) with the given affine data.

    The minimal choice of k makes the triple unique: either r = 0, or k = 0,
    or n does not divide l.
    """
    if n == 0:
        raise DomainError("affine representation needs n != 0")
    cap = resolve_max_bits(max_bits)
    k1 = max(0, -g.k, g.b.l)
    l1 = _check_cap(g.b.num * n ** (k1 - g.b.l), cap)
    r1 = k1 + g.k
    return Word.from_pairs([("t", k1), ("a", l1), ("t", -r1)])


@dataclass(frozen=True, slots=True)
class Weight:
    """Position in the lower central series: gamma_index, or omega (index None)."""

    index: int | None

    @classmethod
    def finite(cls, i: int) -> "Weight":
        return cls(i)

    @classmethod
    def omega(cls) -> "Weight":
        return cls(None)

    @property
    def is_omega(self) -> bool:
        return self.index is None

    def at_least(self, i: int) -> bool:
        return self.index is None or self.index >= i

    def __str__(self) -> str:
        return "omega" if self.index is None else str(self.index)


def lcs_weight(n: int, g: AffineElem) -> Weight:
    """Largest i with g in gamma_i(BS(1, n)), or omega if g lies in them all.

    For |n - 1| > 1 the weight of a nonidentity element with k = 0 is
    1 + min over primes p | (n-1) of floor(v_p(num) / v_p(n-1)); any element
    with k != 0 sits only in gamma_1.  n = 2 collapses everything with k = 0
    into gamma_omega, and n = 1 is the abelian group Z x Z.
    """
    if n == 0:
        raise DomainError("weights need n != 0")
    if g.is_identity:
        return Weight.omega()
    if n == 1:
        return Weight.finite(1)
    if g.k != 0:
        return Weight.finite(1)
    if n == 2:
        return Weight.omega()
    q = n - 1
    num = abs(g.b.num)
    depth = min(valuation(num, p) // e for p, e in prime_factors(q).items())
    return Weight.finite(1 + depth)


def gamma_quot_image(n: int, i: int, g: AffineElem) -> int:
    """Image of g in gamma_i / gamma_{i+1} identified with Z_{|n-1|}.

    Dividing the translation by (n-1)^{i-1} and reducing the numerator mod
    |n-1| is well defined because n = 1 there, making all denominators act
    trivially.  Requires |n-1| > 1 and weight(g) >= i.
    """
    if n in (0, 1, 2):
        raise DomainError("gamma quotients need |n-1| > 1")
    if i < 2:
        raise DomainError("the cyclic quotient map starts at gamma_2/gamma_3's level i = 2")
    if not lcs_weight(n, g).at_least(i):
        raise DomainError(f"element has weight {lcs_weight(n, g)}, below gamma_{i}")
    c = zn_divexact_int(n, g.b, (n - 1) ** (i - 1))
    return c.num % abs(n - 1)
