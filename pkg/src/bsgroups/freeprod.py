"""Arithmetic in Z * Z_d and the central splitting for BS(m, +-m).

Killing a^d in BS(m, n) (d = gcd(|m|, |n|)) collapses the defining relation,
so the quotient is the free product Z * Z_d generated by the images of t
and a.  Words there have a syllable normal form: alternating t-powers
(nonzero) and a-powers with exponents in [1, d-1].

The kernel of Z * Z_d -> Z x Z_d (the Cartesian subgroup) is free on the
commutators [t^k, a^l], k != 0, 1 <= l <= d-1.  fp_rewrite_basis expresses a
kernel element in that basis by Reidemeister-Schreier rewriting along the
Schreier transversal {t^k a^l}: scanning letters while tracking the coset
state (k, l mod d), each t-letter crossed at l != 0 contributes a nontrivial
Schreier generator, which expands into at most two basis letters via

    t^k a^l t a^-l t^-(k+1)  =  [t^-k, a^(d-l)] [t^(-k-1), a^(d-l)]^-1.

For |n| = m the commutator subgroup of BS(m, n) splits off a central cyclic
part: gamma_2(BS(m, m)) maps isomorphically onto the Cartesian subgroup,
while gamma_2(BS(m, -m)) = <a^(2m)> x (that free group).  split_central
recovers the central exponent and the free coordinates, verifying the
reassembly through Britton normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .britton import BSParams, nf_equal, normalize
from .errors import DomainError, VerificationError
from .words import Word, exp_sums


@dataclass(frozen=True, slots=True)
class FreeProdWord:
    """Syllable normal form in Z * Z_d: t-exponents nonzero, a-exponents in
    [1, d-1], kinds alternating."""

    d: int
    syllables: tuple[tuple[str, int], ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return "".join(f"({g}^{e})" for g, e in self.syllables)


def fp_normalize(d: int, w) -> FreeProdWord:
    """Reduce a Word (or raw pairs) to its Z * Z_d syllable normal form."""
    if d < 2:
        raise DomainError("free product Z * Z_d needs d >= 2")
    pairs = w.syllables if isinstance(w, Word) else tuple(w)
    out: list[tuple[str, int]] = []
    for g, e in pairs:
        if g == "a":
            e %= d
        if e == 0:
            continue
        if out and out[-1][0] == g:
            merged = out[-1][1] + e
            if g == "a":
                merged %= d
            out.pop()
            if merged != 0:
                out.append((g, merged))
        else:
            out.append((g, e))
    return FreeProdWord(d, tuple(out))


@dataclass(frozen=True, slots=True)
class BasisWord:
    """Freely reduced product of basis commutators [t^k, a^l]^sign."""

    d: int
    tokens: tuple[tuple[int, int, int], ...] = ()  # (k != 0, l in [1, d-1], sign)

    @property
    def is_identity(self) -> bool:
        return not self.tokens

    def __str__(self) -> str:
        if not self.tokens:
            return "1"
        return " ".join(
            f"c({k},{l})" if s == 1 else f"c({k},{l})^-1" for k, l, s in self.tokens
        )


def _emit(tokens: list[tuple[int, int, int]], k: int, l: int, sign: int) -> None:
    if k == 0:
        return
    tok = (k, l, sign)
    if tokens and tokens[-1] == (k, l, -sign):
        tokens.pop()
    else:
        tokens.append(tok)


def fp_rewrite_basis(w: FreeProdWord) -> BasisWord:
    """Rewrite a Cartesian-subgroup element in the [t^k, a^l] basis.

    Requires sigma_t(w) = 0 and sigma_a(w) = 0 mod d, i.e. the scan must
    return to the coset of the identity.
    """
    d = w.d
    k = 0
    l = 0
    tokens: list[tuple[int, int, int]] = []
    for g, e in w.syllables:
        if g == "a":
            l = (l + e) % d
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if step == 1:
                if l != 0:
                    _emit(tokens, -k, d - l, 1)
                    _emit(tokens, -k - 1, d - l, -1)
                k += 1
            else:
                if l != 0:
                    _emit(tokens, -k, d - l, 1)
                    _emit(tokens, 1 - k, d - l, -1)
                k -= 1
    if k != 0 or l != 0:
        raise DomainError(
            "word lies outside the Cartesian subgroup "
            f"(coset state ({k}, {l}) after scanning)"
        )
    return BasisWord(d, tuple(tokens))


def lift_basis(p: BSParams, bw: BasisWord) -> Word:
    """Spell a basis word literally as commutators in the generators of G."""
    if bw.d != p.d:
        raise DomainError(f"basis word is over Z * Z_{bw.d}, params have d = {p.d}")
    pairs: list[tuple[str, int]] = []
    for k, l, s in bw.tokens:
        if s == 1:  # t^-k a^-l t^k a^l
            pairs += [("t", -k), ("a", -l), ("t", k), ("a", l)]
        else:  # a^-l t^-k a^l t^k
            pairs += [("a", -l), ("t", -k), ("a", l), ("t", k)]
    return Word.from_pairs(pairs)


@dataclass(frozen=True, slots=True)
class CentralSplit:
    """gamma_2 coordinates for BS(m, +-m): g = a^(2mc) * lift(basis).

    For BS(m, m) the central part is always trivial (c = 0).
    """

    c: int
    basis: BasisWord


def split_central(p: BSParams, w: Word, max_bits: int | None = None) -> CentralSplit:
    m = p.m
    if abs(p.n) != m or m < 2:
        raise DomainError("central splitting applies to BS(m, +-m) with m >= 2")
    s = exp_sums(w)
    ab_mod = abs(p.n - p.m)  # 0 for n = m, 2m for n = -m
    in_gamma2 = s.sigma_t == 0 and (
        s.sigma_a == 0 if ab_mod == 0 else s.sigma_a % ab_mod == 0
    )
    if not in_gamma2:
        raise DomainError("word is not in the commutator subgroup")

    basis = fp_rewrite_basis(fp_normalize(m, w))
    lifted = lift_basis(p, basis)
    rest = normalize(p, w * lifted.inverse(), max_bits)
    if rest.tail:
        raise VerificationError("residual after removing free coordinates is not an a-power")
    if p.n == m:
        if rest.r0 != 0:
            raise VerificationError("BS(m, m) split left a nonzero central part")
        return CentralSplit(0, basis)
    if rest.r0 % (2 * m) != 0:
        raise VerificationError("central part is not a multiple of 2m")
    c = rest.r0 // (2 * m)
    recombined = Word.from_pairs((("a", 2 * m * c),)) * lifted
    if not nf_equal(p, recombined, w, max_bits):
        raise VerificationError("reassembly a^(2mc) * lift(basis) does not reproduce the input")
    return CentralSplit(c, basis)
