"""Small integer number theory helpers: primality, divisors, totient, orders."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

_TRIAL_LIMIT = 1 << 20

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for desk-scale integers.

    Trial division below 2**20; strong-pseudoprime witnesses beyond.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    if n <= _TRIAL_LIMIT:
        d = 3
        r = isqrt(n)
        while d <= r:
            if n % d == 0:
                return False
            d += 2
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"prime_factors needs n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def factorization(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    out: dict[int, int] = {}
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler totient."""
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)^*; requires gcd(a, n) = 1."""
    a %= n
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = 1
    x = a
    while x != 1:
        x = x * a % n
        order += 1
    return order


def invariant_factors(orders: tuple[int, ...]) -> tuple[int, ...]:
    """Invariant-factor chain d_1 | d_2 | ... | d_k of a product of cyclic groups.

    Trivial factors (order 1) are dropped unless the whole group is trivial.
    """
    primary: dict[int, list[int]] = {}
    for m in orders:
        if m < 1:
            raise ValueError(f"cyclic factor orders must be >= 1, got {m}")
        for p, e in factorization(m).items():
            primary.setdefault(p, []).append(e)
    if not primary:
        return (1,)
    k = max(len(v) for v in primary.values())
    chain = []
    for i in range(k):
        d = 1
        for p, exps in primary.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                d *= p ** exps_sorted[i]
        chain.append(d)
    return tuple(chain[::-1])
