"""Explicit commutator witnesses for lower-central-series memberships.

The engine behind every witness is the identity

    [a^(m*q), t] = a^(-m*q) t^-1 a^(m*q) t = a^((n-m)*q)

in BS(m, n).  Iterating it from a^m produces a^((n-m)^i) as an i-fold
left-normed commutator, so that power lies in gamma_{i+1}.  The inner power
in the recursion W_{i+1} = [W_i^m, t] must be m: raising W_i (whose value is
a^((n-m)^i)) to the m-th power produces the a^(m*q) shape the identity
consumes.  Raising it to the n-th power does not, and fails to reproduce
a^((n-m)^{i+1}) in general; the britton engine arbitrates.

When n = m + d for d = gcd(m, n), the same identity with q = 1 gives
[a^m, t] = a^d, and a^m = (a^d)^(m/d) is itself a power of a^d, which makes
a^d reproducible at every commutator depth.  All witnesses are verified
against Britton normal forms before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .britton import BSParams, nf_equal
from .classify import classify
from .errors import DomainError, VerificationError
from .words import (
    CommExpr,
    Commutator,
    Conjugate,
    Gen,
    Power,
    Product,
    Word,
    eval_expr,
    gamma_weight_lower_bound,
    pretty_print,
)


def comm_depth(expr: CommExpr) -> int:
    """Nesting depth of commutator brackets (powers are transparent)."""
    if isinstance(expr, Commutator):
        return 1 + max(comm_depth(expr.left), comm_depth(expr.right))
    if isinstance(expr, Power):
        return comm_depth(expr.base)
    if isinstance(expr, Product):
        return max((comm_depth(f) for f in expr.factors), default=0)
    if isinstance(expr, Conjugate):
        return comm_depth(expr.inner)
    return 0


@dataclass(frozen=True)
class MembershipWitness:
    """A commutator expression whose value is target, placing it in gamma_depth."""

    expr: CommExpr
    target: Word
    depth: int
    m: int
    n: int

    def to_json_dict(self) -> dict:
        return {
            "expr": pretty_print(self.expr),
            "target": str(self.target),
            "depth": self.depth,
            "verified": True,
        }


def _verified(p: BSParams, expr: CommExpr, target: Word, depth: int,
              max_bits: int | None = None) -> MembershipWitness:
    value = eval_expr(expr, max_bits)
    if not nf_equal(p, value, target, max_bits):
        raise VerificationError(
            f"witness {pretty_print(expr)} does not evaluate to {target} "
            f"in BS({p.m},{p.n})"
        )
    lb = gamma_weight_lower_bound(expr)
    if lb is not None and lb < depth:
        raise VerificationError(
            f"witness {pretty_print(expr)} has structural weight {lb} < {depth}"
        )
    return MembershipWitness(expr, target, depth, p.m, p.n)


def lemma2_witness(p: BSParams, i: int, max_bits: int | None = None) -> MembershipWitness:
    """W_i with value a^((n-m)^i), an i-fold commutator, so W_i is in gamma_{i+1}.

    W_1 = [a^m, t], W_{i+1} = [W_i^m, t].
    """
    if i < 1:
        raise DomainError("witness index must be >= 1")
    expr: CommExpr = Commutator(Power(Gen("a"), p.m), Gen("t"))
    for _ in range(i - 1):
        expr = Commutator(Power(expr, p.m), Gen("t"))
    target = Word.from_pairs((("a", (p.n - p.m) ** i),))
    w = _verified(p, expr, target, i + 1, max_bits)
    if comm_depth(expr) != i:
        raise VerificationError("witness has wrong commutator depth")
    return w


def gamma_membership_witness(
    p: BSParams, target: Word, s: int, max_bits: int | None = None
) -> MembershipWitness:
    """Express target as an (s-1)-fold commutator, certifying target in gamma_s.

    Supported shape: n = m + d with d = gcd(m, n) > 0 and target = a^d
    (d = 1 makes the target the generator a itself).  Construction:
    U_1 = [a^m, t] and U_{j+1} = [U_j^(m/d), t]; every U_j evaluates to a^d.
    """
    if s < 2:
        raise DomainError("target depth s must be >= 2")
    if p.m < 1:
        raise DomainError("witness construction expects m >= 1")
    d = gcd(p.m, abs(p.n))
    if p.n != p.m + d:
        raise DomainError(
            f"no witness recipe for BS({p.m},{p.n}): it needs n = m + gcd(m, n)"
        )
    if target != Word.from_pairs((("a", d),)):
        raise DomainError(f"unsupported target {target}; expected a^{d}")
    k = p.m // d
    expr: CommExpr = Commutator(Power(Gen("a"), p.m), Gen("t"))
    for _ in range(s - 2):
        expr = Commutator(Power(expr, k), Gen("t"))
    return _verified(p, expr, target, s, max_bits)


@dataclass(frozen=True)
class OmegaStabilityReport:
    """Desk-scale evidence that gamma_omega = [gamma_omega, G] on generators.

    Shows a^d = [a^(kd), t] with a^(kd) a power of a^d, hence inside the
    normal closure that equals gamma_omega.  Evidence, not a proof.
    """

    m: int
    n: int
    d: int
    k: int
    identity: str
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "identity": self.identity,
            "verified": self.verified,
            "note": "stable under [., G] on generators; evidence, not proof",
        }


def omega_stability_check(p: BSParams, max_bits: int | None = None) -> OmegaStabilityReport:
    rep = classify(p.m, p.n)
    if rep.gamma_omega.kind != "equals":
        raise DomainError(
            "stability check needs a group whose gamma_omega is known to be "
            f"the normal closure of a power of a; BS({p.m},{p.n}) has "
            f"gamma_omega {rep.gamma_omega}"
        )
    d = rep.gamma_omega.d
    cm, cn = rep.canonical
    q = BSParams(cm, cn)
    k = cm // d
    expr = Commutator(Power(Gen("a"), k * d), Gen("t"))
    value = eval_expr(expr, max_bits)
    target = Word.from_pairs((("a", d),))
    if not nf_equal(q, value, target, max_bits):
        raise VerificationError(
            f"stability identity failed: [a^{k * d}, t] != a^{d} in BS({cm},{cn})"
        )
    return OmegaStabilityReport(
        p.m, p.n, d, k, f"a^{d} = [a^{k * d}, t] with a^{k * d} in gamma_omega", True
    )
