"""Small integer helpers: Euclidean division, trial factoring, orders.

Everything here is desk scale (inputs comfortably below 10**9), so trial
division is plenty.
"""

from __future__ import annotations

from math import gcd, isqrt


def euclid_divmod(e: int, d: int) -> tuple[int, int]:
    """Return (q, r) with e = d*q + r and 0 <= r < |d|.

    Unlike divmod(), the remainder is canonical for negative d too.
    """
    if d == 0:
        raise ZeroDivisionError("euclid_divmod with zero divisor")
    r = e % abs(d)
    return (e - r) // d, r


def prime_factors(n: int) -> dict[int, int]:
    """Factor |n| > 0 by trial division, returned as {prime: multiplicity}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """If |n| = p**e with e >= 1, return (p, e); otherwise None.

    1 is not treated as a prime power.
    """
    n = abs(n)
    if n < 2:
        return None
    fac = prime_factors(n)
    if len(fac) != 1:
        return None
    ((p, e),) = fac.items()
    return p, e


def valuation(x: int, p: int) -> int:
    """p-adic valuation of x != 0 (of |x|; sign is ignored)."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def multiplicative_order(u: int, mod: int) -> int:
    """Order of u in (Z/mod)*; u must be a unit."""
    u %= mod
    if gcd(u, mod) != 1:
        raise ValueError(f"{u} is not a unit modulo {mod}")
    k = 1
    acc = u
    while acc != 1 % mod:
        acc = acc * u % mod
        k += 1
        if k > mod:
            raise RuntimeError("order computation ran away")  # unreachable
    return k
