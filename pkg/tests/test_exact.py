"""Exact-arithmetic ground layer tests."""

import math
import random
from fractions import Fraction as F

import pytest
from mpmath import mp

from logirr.exact import (
    BigFloat,
    GaussianRational as G,
    is_prime,
    lcm_upto,
    ordp_factorial,
    primes_in,
    to_mpf,
)


def test_lcm_upto_examples():
    assert lcm_upto(1) == 1
    assert lcm_upto(0) == 1
    # independent fold oracle
    def fold(n):
        out = 1
        for k in range(1, n + 1):
            out = out * k // math.gcd(out, k)
        return out
    assert lcm_upto(6) == fold(6) == 60
    assert lcm_upto(10) == fold(10) == 2520


def test_lcm_grows_by_single_primes_only():
    prev = 1
    for n in range(1, 300):
        cur = lcm_upto(n)
        q = cur // prev
        assert cur % prev == 0
        assert q == 1 or is_prime(_prime_root(q))
        prev = cur


def _prime_root(q):
    # q is a prime power p^k when lcm jumps; return p
    for p in primes_in(2, q):
        if q % p == 0:
            return p
    return q


def test_lcm_log_growth_matches_prime_number_theorem():
    with mp.workdps(30):
        r3 = float(mp.log(lcm_upto(1000))) / 1000
        r4 = float(mp.log(lcm_upto(10000))) / 10000
    assert abs(r3 - 1) < 0.15
    assert abs(r4 - 1) < 0.05


def test_ordp_factorial_examples():
    assert ordp_factorial(2, 4) == 3
    assert ordp_factorial(5, 4) == 0
    assert ordp_factorial(3, 9) == 4


def test_ordp_factorial_rejects_composite():
    with pytest.raises(ValueError):
        ordp_factorial(4, 10)


def test_ordp_factorial_matches_bruteforce():
    def brute(p, n):
        total = 0
        for k in range(1, n + 1):
            while k % p == 0:
                k //= p
                total += 1
        return total
    for p in primes_in(2, 50):
        for n in range(0, 501, 7):
            assert ordp_factorial(p, n) == brute(p, n)
        assert ordp_factorial(p, 500) == brute(p, 500)


def test_primes_in_examples():
    assert primes_in(2, 10) == [2, 3, 5, 7]
    assert primes_in(14, 16) == []
    assert primes_in(97, 97) == [97]


def test_primes_in_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        f = 2
        while f * f <= n:
            if n % f == 0:
                return False
            f += 1
        return True
    got = set(primes_in(2, 2000))
    for n in range(2, 2001):
        assert (n in got) == trial(n)


def test_miller_rabin_above_sieve():
    assert is_prime(10_000_019)
    assert not is_prime(10_000_021)  # 3 * 3333340.33... => composite check
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)


def test_gaussian_norm_is_multiplicative():
    rng = random.Random(11)
    for _ in range(200):
        x = G.of(F(rng.randint(-9, 9), rng.randint(1, 9)),
                 F(rng.randint(-9, 9), rng.randint(1, 9)))
        y = G.of(F(rng.randint(-9, 9), rng.randint(1, 9)),
                 F(rng.randint(-9, 9), rng.randint(1, 9)))
        assert (x * y) * (x * y).conjugate() == \
            G.of((x * x.conjugate()).re * (y * y.conjugate()).re)


def test_gaussian_field_operations():
    x = G.of(F(3, 2), F(-1, 3))
    y = G.of(F(0), F(2))
    assert x + y - y == x
    assert x.conjugate().conjugate() == x
    assert (x / y) * y == x
    assert x ** 3 == x * x * x
    assert (x ** -2) * x ** 2 == G.of(1)
    one_plus_i = G.of(1, 1)
    assert one_plus_i ** 2 == G.of(0, 2)
    assert one_plus_i.is_gaussian_integer()
    assert not x.is_gaussian_integer()
    with pytest.raises(ZeroDivisionError):
        x / G.of(0)


def test_bigfloat_records_precision():
    v = BigFloat(to_mpf(F(1, 3), 40), 40)
    assert v.precision == 40
    assert abs(float(v) - 1 / 3) < 1e-15
    assert str(v).startswith("0.3333")
