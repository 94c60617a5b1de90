"""Integer helpers: primality, divisors, totient, orders, invariant factors."""

import pytest

from groupfft.numtheory import (
    divisors,
    euler_phi,
    factorization,
    invariant_factors,
    is_prime,
    multiplicative_order,
    prime_factors,
)


def test_is_prime_small():
    primes_below_50 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert [n for n in range(50) if is_prime(n)] == primes_below_50


def test_is_prime_large_witness_path():
    # beyond the trial-division limit
    assert is_prime((1 << 31) - 1)  # Mersenne prime 2^31 - 1
    assert not is_prime((1 << 31) - 3)
    assert is_prime(10 ** 9 + 7)


def test_prime_factors_and_factorization():
    assert prime_factors(360) == (2, 3, 5)
    assert factorization(360) == {2: 3, 3: 2, 5: 1}
    assert factorization(1) == {}


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(49) == [1, 7, 49]


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    # multiplicativity on coprime pairs
    assert euler_phi(35) == euler_phi(5) * euler_phi(7)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(1, 1) == 1
    assert multiplicative_order(7, 11) == 10
    with pytest.raises(ValueError):
        multiplicative_order(2, 4)


def test_order_divides_group_order():
    for n in range(2, 30):
        for a in range(1, n):
            from math import gcd

            if gcd(a, n) == 1:
                r = multiplicative_order(a, n)
                assert euler_phi(n) % r == 0
                assert pow(a, r, n) == 1


def test_invariant_factors():
    assert invariant_factors((2, 3)) == (6,)
    assert invariant_factors((2, 2, 5)) == (2, 10)
    assert invariant_factors((4, 6)) == (2, 12)
    assert invariant_factors((1, 1)) == (1,)
    assert invariant_factors((6,)) == (6,)
    # result is always a divisor chain with the same product
    import math

    for orders in [(8, 12, 18), (2, 3, 4, 5), (9, 9, 3)]:
        chain = invariant_factors(orders)
        assert all(b % a == 0 for a, b in zip(chain, chain[1:]))
        assert math.prod(chain) == math.prod(orders)
