"""Finite nilpotent quotients of BS(m, n) and non-membership certificates.

Two families of finite p-group quotients are built explicitly:

  * Semidirect: Z_{p^k} x| Z_{p^j} with t acting on a by multiplication by
    u = n * m^{-1} mod p^k.  Needs gcd(m, p) = 1 and u = 1 mod p (so the
    group is a p-group and the action has p-power order).
  * Wreath: Z_{p^e} wr Z_{p^j} with a the base generator at position 0 and
    t the cyclic shift.  This receives BS(m, n) whenever p^e divides both
    exponents, by factoring through the quotient that kills a^gcd.

Lower central series of these quotients are computed by brute force over
explicit element sets.  Since any homomorphism maps gamma_i into gamma_i,
an image lying outside gamma_i(Q) certifies that the element lies outside
gamma_i(G).  certify_not_in_gamma searches a budgeted family of quotients,
smallest first, for such a certificate.  A None result is inconclusive: it
never proves membership.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, VerificationError
from .intmath import is_prime, multiplicative_order, prime_factors, valuation
from .words import Word

CONSTRUCTION_ORDER_CAP = 10_000_000


@dataclass(frozen=True, slots=True)
class Semidirect:
    """Z_{p^k} x| Z_{p^j}; elements (x, y), a -> (1, 0), t -> (0, 1).

    Normal form x^alpha y^beta with y^-1 x y = x^u gives the product rule
    (x1, y1)(x2, y2) = (x1 + x2 * u^-y1, y1 + y2).
    """

    p: int
    k: int
    j: int
    u: int

    @property
    def order(self) -> int:
        return self.p ** (self.k + self.j)

    @property
    def identity(self):
        return (0, 0)

    @property
    def a_img(self):
        return (1, 0)

    @property
    def t_img(self):
        return (0, 1)

    def mul(self, g, h):
        pk = self.p**self.k
        x = (g[0] + h[0] * pow(self.u, -g[1], pk)) % pk
        return (x, (g[1] + h[1]) % self.p**self.j)

    def inv(self, g):
        pk = self.p**self.k
        return ((-g[0] * pow(self.u, g[1], pk)) % pk, -g[1] % self.p**self.j)

    def elements(self):
        return itertools.product(range(self.p**self.k), range(self.p**self.j))

    def describe(self) -> str:
        return f"Z_{self.p**self.k} x|_{self.u} Z_{self.p**self.j}"

    def size_params(self) -> tuple[int, int]:
        return (self.k, self.j)


@dataclass(frozen=True, slots=True)
class Wreath:
    """Z_{p^e} wr Z_{p^j}; elements (f, s) with f a length-p^j tuple.

    a -> delta at position 0, t -> shift by one.  Product rule
    (f1, s1)(f2, s2) = (i -> f1[i] + f2[i - s1], s1 + s2).
    """

    p: int
    e: int
    j: int

    @property
    def order(self) -> int:
        return self.p ** (self.e * self.p**self.j + self.j)

    @property
    def identity(self):
        return ((0,) * self.p**self.j, 0)

    @property
    def a_img(self):
        L = self.p**self.j
        return ((1,) + (0,) * (L - 1), 0)

    @property
    def t_img(self):
        return ((0,) * self.p**self.j, 1)

    def mul(self, g, h):
        L = self.p**self.j
        pe = self.p**self.e
        f1, s1 = g
        f2, s2 = h
        return (
            tuple((f1[i] + f2[(i - s1) % L]) % pe for i in range(L)),
            (s1 + s2) % L,
        )

    def inv(self, g):
        L = self.p**self.j
        pe = self.p**self.e
        f, s = g
        return (tuple(-f[(i + s) % L] % pe for i in range(L)), -s % L)

    def elements(self):
        L = self.p**self.j
        for f in itertools.product(range(self.p**self.e), repeat=L):
            for s in range(L):
                yield (f, s)

    def describe(self) -> str:
        return f"Z_{self.p**self.e} wr Z_{self.p**self.j}"

    def size_params(self) -> tuple[int, int]:
        return (self.e, self.j)


FinQuot = Semidirect | Wreath


def fq_pow(q: FinQuot, g, e: int):
    e %= q.order  # Lagrange
    acc = q.identity
    base = g
    while e:
        if e & 1:
            acc = q.mul(acc, base)
        base = q.mul(base, base)
        e >>= 1
    return acc


def fq_eval(q: FinQuot, w: Word):
    """Image of a word under a -> a_img, t -> t_img."""
    acc = q.identity
    for g, e in w.syllables:
        img = q.a_img if g == "a" else q.t_img
        acc = q.mul(acc, fq_pow(q, img, e))
    return acc


def bs_relation_holds(q: FinQuot, m: int, n: int) -> bool:
    """Check t^-1 a^m t = a^n on the generator images."""
    lhs = q.mul(q.mul(q.inv(q.t_img), fq_pow(q, q.a_img, m)), q.t_img)
    return lhs == fq_pow(q, q.a_img, n)


def build_semidirect(p: int, k: int, j: int, m: int, n: int) -> Semidirect:
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if k < 1 or j < 1:
        raise DomainError("k and j must be positive")
    pk = p**k
    if p ** (k + j) > CONSTRUCTION_ORDER_CAP:
        raise DomainError(f"order {p}^{k + j} exceeds the construction cap")
    if m % p == 0:
        raise DomainError(f"gcd(m, p) != 1: p = {p} divides m = {m}")
    u = n * pow(m, -1, pk) % pk
    if u % p != 1:
        raise DomainError(
            f"u = n/m = {u % p} mod {p}, but u = 1 mod p is required"
        )
    if pow(u, p**j, pk) != 1:
        raise DomainError(
            f"order of u = {u} mod {pk} does not divide {p}^{j}"
        )
    q = Semidirect(p, k, j, u)
    if not bs_relation_holds(q, m, n):
        raise VerificationError("defining relation fails in the semidirect quotient")
    return q


def build_wreath(p: int, e: int, j: int) -> Wreath:
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if e < 1 or j < 1:
        raise DomainError("e and j must be positive")
    q = Wreath(p, e, j)
    if q.order > CONSTRUCTION_ORDER_CAP:
        raise DomainError(
            f"wreath order {p}^{e * p**j + j} exceeds the construction cap"
        )
    return q


@dataclass(frozen=True)
class GammaChain:
    """gamma_1 > gamma_2 > ... as explicit element sets, ending at {id}."""

    subgroups: tuple[frozenset, ...]

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.subgroups]

    def term(self, i: int, identity) -> frozenset:
        """gamma_i, extending the chain by its stable tail {id}."""
        if i < 1:
            raise DomainError("gamma index must be >= 1")
        if i <= len(self.subgroups):
            return self.subgroups[i - 1]
        return frozenset([identity])


def _closure(q: FinQuot, gens) -> frozenset:
    """Subgroup generated by gens, skipping generators already reached."""
    elems = {q.identity}
    order = [q.identity]
    active: list = []
    for s in gens:
        if s in elems:
            continue
        active.append(s)
        frontier = list(order)
        while frontier:
            h = frontier.pop()
            for g in active:
                x = q.mul(h, g)
                if x not in elems:
                    elems.add(x)
                    order.append(x)
                    frontier.append(x)
    return frozenset(elems)


def _conjugation_closure(q: FinQuot, seed: set) -> set:
    conjugators = [q.a_img, q.t_img, q.inv(q.a_img), q.inv(q.t_img)]
    out = set(seed)
    frontier = list(seed)
    while frontier:
        g = frontier.pop()
        for c in conjugators:
            x = q.mul(q.mul(q.inv(c), g), c)
            if x not in out:
                out.add(x)
                frontier.append(x)
    return out


@lru_cache(maxsize=256)
def fq_gamma_series(q: FinQuot, max_order: int = 1_000_000) -> GammaChain:
    """Brute-force lower central series, gamma_{i+1} = [gamma_i, G]."""
    if q.order > max_order:
        raise DomainError(
            f"group order {q.order} exceeds the series cap {max_order}"
        )
    gens = [q.a_img, q.t_img]
    current = frozenset(q.elements())
    chain = [current]
    trivial = frozenset([q.identity])
    while current != trivial:
        seed = set()
        for g in current:
            gi = q.inv(g)
            for x in gens:
                seed.add(q.mul(q.mul(q.mul(gi, q.inv(x)), g), x))
        nxt = _closure(q, _conjugation_closure(q, seed))
        if not nxt < current:
            raise VerificationError("lower central series failed to descend")
        chain.append(nxt)
        current = nxt
    return GammaChain(tuple(chain))


@dataclass(frozen=True, slots=True)
class SearchBudget:
    k_max: int = 6
    j_max: int = 4
    order_cap: int = 1_000_000


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Certificate:
    """Proof that an element of BS(m, n) lies outside gamma_i.

    Sound because images of gamma_i(G) land in gamma_i(Q) under any
    homomorphism: if the image avoids gamma_i(Q), the element avoids
    gamma_i(G).
    """

    m: int
    n: int
    word: Word
    quotient: FinQuot
    image: object
    i: int
    gamma_sizes: tuple[int, ...]

    @property
    def statement(self) -> str:
        return (
            f"image {self.image} of the element in {self.quotient.describe()} "
            f"lies outside gamma_{self.i}(Q), hence the element lies outside "
            f"gamma_{self.i}(BS({self.m},{self.n}))"
        )

    def verify(self) -> bool:
        """Recompute the image, the chain, and the membership verdict."""
        q = self.quotient
        if not bs_relation_holds(q, self.m, self.n):
            return False
        if fq_eval(q, self.word) != self.image:
            return False
        chain = fq_gamma_series(q)
        if tuple(chain.sizes) != self.gamma_sizes:
            return False
        return self.image not in chain.term(self.i, q.identity)

    def to_json_dict(self) -> dict:
        kp, j = self.quotient.size_params()
        return {
            "quotient": self.quotient.describe(),
            "p": self.quotient.p,
            "k": kp,
            "j": j,
            "image": _jsonable(self.image),
            "i": self.i,
            "gamma_sizes": list(self.gamma_sizes),
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


def _semidirect_primes(m: int, n: int) -> list[int]:
    if n == m:
        # action is trivial for every p coprime to m; two small ones suffice
        out = []
        c = 2
        while len(out) < 2:
            if is_prime(c) and m % c != 0:
                out.append(c)
            c += 1
        return out
    return [p for p in prime_factors(abs(n - m)) if m % p != 0]


def quotient_family(m: int, n: int, budget: SearchBudget = DEFAULT_BUDGET) -> list[FinQuot]:
    """All in-budget quotients receiving BS(m, n), smallest first."""
    d = math.gcd(abs(m), abs(n))
    out: list[FinQuot] = []
    for p in _semidirect_primes(m, n):
        for k in range(1, budget.k_max + 1):
            pk = p**k
            u = n * pow(m, -1, pk) % pk
            if u % p != 1:
                continue
            j_min = max(1, valuation(multiplicative_order(u, pk), p))
            for j in range(j_min, budget.j_max + 1):
                if p ** (k + j) <= budget.order_cap:
                    out.append(Semidirect(p, k, j, u))
    for p in prime_factors(d):
        for e in range(1, valuation(d, p) + 1):
            for j in range(1, budget.j_max + 1):
                q = Wreath(p, e, j)
                if q.order <= budget.order_cap:
                    out.append(q)
    out.sort(key=lambda q: q.order)
    return out


def certify_not_in_gamma(
    m: int,
    n: int,
    w: Word,
    i: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Certificate | None:
    """Search the budgeted quotient family for a gamma_i exclusion proof.

    None means no quotient in the family separated the element; that is
    inconclusive, not a membership proof.
    """
    if i < 2:
        raise DomainError("certification index must be >= 2")
    for q in quotient_family(m, n, budget):
        if not bs_relation_holds(q, m, n):
            raise VerificationError(
                f"family produced an invalid quotient {q.describe()}"
            )
        image = fq_eval(q, w)
        if image == q.identity:
            continue
        chain = fq_gamma_series(q, budget.order_cap)
        if image not in chain.term(i, q.identity):
            return Certificate(m, n, w, q, image, i, tuple(chain.sizes))
    return None
