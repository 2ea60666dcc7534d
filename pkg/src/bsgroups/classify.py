"""Residual-property classification of BS(m, n) and subgroup-chain reports.

Everything is decided on the canonical parameter pair (m', n') with
0 < m' <= |n'|, reachable from (m, n) by swapping the exponents and by
negating both; all three presentations give isomorphic groups.

Implemented facts, each a decidable predicate of (m', n'):

  * residually finite        iff  m' = 1 or |n'| = m'
  * residually p             iff  m' = 1 and p | n' - 1 (every p when
                                  n' = 1), or n' = m' = p^r, or
                                  n' = -m' with m' = 2^r
  * residually nilpotent     iff  (m' = 1, n' != 2) or |n'| = m' > 1
                                  with m' a prime power
  * residually (torsion-free nilpotent)  iff  (m', n') = (1, 1)
  * lower central series has length 2 for (1, 1), (1, 2) and (m, m+1);
    length omega for the residually nilpotent non-abelian groups
  * gamma_omega is trivial iff residually nilpotent; equals the normal
    closure of a^d when n' = m' + d with d = gcd equal to 1 or a prime
    power; strictly contains it when that d is not a prime power

Cases left open by these rules are reported as unknown rather than
guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from random import Random

from .britton import BSParams
from .errors import DomainError
from .freeprod import BasisWord, fp_normalize, lift_basis
from .intmath import prime_factors, prime_power
from .words import Word


def canonical_form(m: int, n: int) -> tuple[int, int]:
    """The unique presentation of the isomorphism class with 0 < m' <= |n'|."""
    if m == 0 or n == 0:
        raise DomainError("parameters must be nonzero")
    candidates = {(m, n), (n, m), (-m, -n), (-n, -m)}
    chosen = {c for c in candidates if 0 < c[0] <= abs(c[1])}
    if len(chosen) != 1:
        raise DomainError(f"canonicalization of ({m}, {n}) is ambiguous")
    return chosen.pop()


@dataclass(frozen=True, slots=True)
class ResiduallyP:
    """Primes p for which the group is residually p, with the reason."""

    kind: str  # "all" | "some" | "none"
    primes: tuple[int, ...]
    condition: str

    def __str__(self) -> str:
        if self.kind == "all":
            return "all"
        if self.kind == "none":
            return "none"
        return ";".join(str(p) for p in self.primes)

    @property
    def nonempty(self) -> bool:
        return self.kind != "none"


@dataclass(frozen=True, slots=True)
class GammaOmega:
    """Verdict on the intersection of the lower central series."""

    kind: str  # "trivial" | "equals" | "contains" | "unknown"
    d: int | None = None

    def __str__(self) -> str:
        if self.kind == "equals":
            return f"=NC(a^{self.d})"
        if self.kind == "contains":
            return f">NC(a^{self.d})"
        return self.kind


@dataclass(frozen=True, slots=True)
class ClassDiffs:
    """Position in the chain residually-p < residually nilpotent < residually finite."""

    in_rf: bool
    in_rn: bool
    in_rp_any: bool
    strict: str | None  # "rf_not_rn" | "rn_not_rp" | None


@dataclass(frozen=True)
class ClassReport:
    m: int
    n: int
    canonical: tuple[int, int]
    abelianization: str
    residually_finite: bool
    residually_p: ResiduallyP
    residually_nilpotent: bool
    residually_torsionfree_nilpotent: bool
    lcs_length: str  # "2" | "omega" | "unknown"
    gamma_omega: GammaOmega
    class_diffs: ClassDiffs

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "canonical_m": self.canonical[0],
            "canonical_n": self.canonical[1],
            "abelianization": self.abelianization,
            "residually_finite": self.residually_finite,
            "residually_p": {
                "kind": self.residually_p.kind,
                "primes": list(self.residually_p.primes),
                "condition": self.residually_p.condition,
            },
            "residually_nilpotent": self.residually_nilpotent,
            "residually_torsionfree_nilpotent": self.residually_torsionfree_nilpotent,
            "lcs_length": self.lcs_length,
            "gamma_omega": {"kind": self.gamma_omega.kind, "d": self.gamma_omega.d},
            "class_diffs": {
                "in_rf": self.class_diffs.in_rf,
                "in_rn": self.class_diffs.in_rn,
                "in_rp_any": self.class_diffs.in_rp_any,
                "strict": self.class_diffs.strict,
            },
        }


def _residually_p(cm: int, cn: int) -> ResiduallyP:
    if cm == 1:
        if cn == 1:
            return ResiduallyP("all", (), "n = m = 1")
        ps = tuple(sorted(prime_factors(abs(cn - 1))))
        if not ps:  # n = 2: n - 1 = 1 has no prime divisors
            return ResiduallyP("none", (), "no prime divides n - 1")
        return ResiduallyP("some", ps, "m = 1 and p divides n - 1")
    if cn == cm:
        pp = prime_power(cm)
        if pp is not None:
            return ResiduallyP("some", (pp[0],), "n = m = p^r")
        return ResiduallyP("none", (), "n = m not a prime power")
    if cn == -cm:
        pp = prime_power(cm)
        if pp is not None and pp[0] == 2:
            return ResiduallyP("some", (2,), "n = -m with m = 2^r")
        return ResiduallyP("none", (), "n = -m with m not a power of 2")
    return ResiduallyP("none", (), "not residually finite")


def classify(m: int, n: int) -> ClassReport:
    cm, cn = canonical_form(m, n)
    d = gcd(cm, abs(cn))

    diff = abs(cn - cm)
    if diff == 0:
        ab = "Z x Z"
    elif diff == 1:
        ab = "Z"
    else:
        ab = f"Z x Z_{diff}"

    rf = cm == 1 or abs(cn) == cm
    rp = _residually_p(cm, cn)
    rn = (cm == 1 and cn != 2) or (abs(cn) == cm > 1 and prime_power(cm) is not None)
    rtfn = (cm, cn) == (1, 1)
    abelian = (cm, cn) == (1, 1)

    if (cm, cn) == (1, 1) or cn == cm + 1:
        lcs = "2"
    elif rn and not abelian:
        lcs = "omega"
    else:
        lcs = "unknown"

    if rn:
        go = GammaOmega("trivial")
    elif cn == cm + d:
        if d == 1 or prime_power(d) is not None:
            go = GammaOmega("equals", d)
        else:
            go = GammaOmega("contains", d)
    else:
        go = GammaOmega("unknown")

    if rf and not rn:
        strict = "rf_not_rn"
    elif rn and not rp.nonempty:
        strict = "rn_not_rp"
    else:
        strict = None
    diffs = ClassDiffs(rf, rn, rp.nonempty, strict)

    return ClassReport(m, n, (cm, cn), ab, rf, rp, rn, rtfn, lcs, go, diffs)


@dataclass(frozen=True)
class ChainReport:
    """Symbolic subgroup chain between G and the commutator-relator subgroup.

    case 0 is degenerate: either the group is residually finite (the
    standing assumption behind the chain fails) or no case applies.
    """

    m: int
    n: int
    canonical: tuple[int, int]
    case: int
    chain: tuple[str, ...]
    quotients: tuple[tuple[str, str], ...]
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "canonical_m": self.canonical[0],
            "canonical_n": self.canonical[1],
            "case": self.case,
            "chain": list(self.chain),
            "quotients": {q: v for q, v in self.quotients},
            "notes": list(self.notes),
        }


def prop5_chain(m: int, n: int) -> ChainReport:
    cm, cn = canonical_form(m, n)
    d = gcd(cm, abs(cn))
    diff = cn - cm

    def report(case, chain, quotients=(), notes=()):
        return ChainReport(m, n, (cm, cn), case, tuple(chain), tuple(quotients), tuple(notes))

    if cm == 1 or abs(cn) == cm:
        return report(
            0,
            ("G",),
            notes=("degenerate: group is residually finite, chain not applicable",),
        )
    if diff == 1 and d == 1:
        return report(
            3,
            ("G", "G' = A = gamma_omega(G)", "R"),
            notes=("A/R abelian",),
        )
    if diff > 1 and d == 1:
        return report(
            2,
            ("G", "A", "G'", "R"),
            quotients=(("G/A", "Z"), ("A/G'", f"Z_{diff}")),
            notes=("G' is a proper subgroup of A", "A/R abelian"),
        )
    if diff == d and prime_power(d) is not None:
        return report(
            5,
            ("G", "G'", "A", "gamma_omega(G)", "R"),
            notes=("A/R abelian",),
        )
    if diff >= d > 1:
        return report(
            1,
            ("G", "G'A", "A", "R"),
            quotients=(
                ("G/G'A", f"Z x Z_{d}"),
                ("G/A", f"Z * Z_{d}"),
                ("G/G'", f"Z x Z_{diff}"),
                ("G'A/A", "F_inf"),
            ),
            notes=("A/R abelian",),
        )
    if d == 1 or prime_power(d) is not None:
        return report(
            4,
            ("G", "G'A", "A", "gamma_omega(G)", "R"),
            notes=("A/R abelian",),
        )
    return report(
        0,
        ("G", "G'A", "A", "R"),
        notes=("no specialized case applies; only the generic inclusions hold",),
    )


def r_generators(p: BSParams, K: int) -> list[Word]:
    """The commutators [t^k a^d t^-k, a] for |k| <= K, freely reduced."""
    if K < 0:
        raise DomainError("K must be >= 0")
    d = p.d
    out = []
    for k in range(-K, K + 1):
        x = Word.from_pairs([("t", k), ("a", d), ("t", -k)])
        out.append(x.inverse() * Word.from_pairs([("a", -1)]) * x * Word.from_pairs([("a", 1)]))
    return out


@dataclass(frozen=True)
class ProbeReport:
    d: int
    K: int
    trials: int
    max_len: int
    checked: int
    nontrivial: int
    skipped_empty: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "K": self.K,
            "trials": self.trials,
            "max_len": self.max_len,
            "checked": self.checked,
            "nontrivial": self.nontrivial,
            "skipped_empty": self.skipped_empty,
            "failures": list(self.failures),
            "ok": self.ok,
        }


def free_subgroup_probe(
    p: BSParams,
    K: int = 3,
    trials: int = 100,
    max_len: int = 6,
    seed: int | None = None,
) -> ProbeReport:
    """Random reduced words in the commutators [t^k, a^s] stay nontrivial.

    Evidence for freeness of the subgroup they generate in Z_d * Z: each
    sampled word is lifted to the generators and its image under killing
    a^d is checked to be a nonidentity element of the free product.
    """
    d = p.d
    if d < 2:
        raise DomainError("free subgroup probe needs gcd(|m|, |n|) >= 2")
    if K < 1:
        raise DomainError("K must be >= 1")
    rng = Random(seed)
    letters = [
        (k, s)
        for k in range(-K, K + 1)
        if k != 0
        for s in range(1, d)
    ]
    checked = nontrivial = skipped = 0
    failures: list[str] = []
    for _ in range(trials):
        length = rng.randint(0, max_len)
        if length == 0:
            skipped += 1
            continue
        tokens: list[tuple[int, int, int]] = []
        while len(tokens) < length:
            k, s = rng.choice(letters)
            sign = rng.choice((1, -1))
            if tokens and tokens[-1] == (k, s, -sign):
                continue  # keep the word reduced
            tokens.append((k, s, sign))
        bw = BasisWord(d, tuple(tokens))
        checked += 1
        image = fp_normalize(d, lift_basis(p, bw))
        if image.is_identity:
            failures.append(str(bw))
        else:
            nontrivial += 1
    return ProbeReport(
        d, K, trials, max_len, checked, nontrivial, skipped, tuple(failures)
    )
