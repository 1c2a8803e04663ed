"""Primality, factorization, and sieving against independent oracles."""

import random

import gmpy2
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pndkit.numkernel import (
    Factorization,
    FactorizationError,
    factor_pairs,
    factor_with_spf,
    factorize,
    iroot,
    is_prime,
    prime_blocks,
    primes_in,
    smallest_prime_factor_table,
)

SMALL_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97,
]


def test_is_prime_small_exhaustive():
    for n in range(-3, 2):
        assert not is_prime(n)
    for n in range(2, 2000):
        assert is_prime(n) == bool(gmpy2.is_prime(n))


def test_is_prime_against_gmpy2_random():
    rng = random.Random(12345)
    for _ in range(300):
        n = rng.randrange(2, 10**12)
        assert is_prime(n) == bool(gmpy2.is_prime(n))


def test_is_prime_large_deterministic_band():
    # straddles the 13-witness deterministic bound
    known_prime = 2**89 - 1  # Mersenne
    assert is_prime(known_prime)
    assert not is_prime(known_prime + 2)


def test_primes_in_matches_table():
    assert list(primes_in(2, 97)) == SMALL_PRIMES
    assert list(primes_in(90, 96)) == []
    assert list(primes_in(97, 97)) == [97]


def test_prime_blocks_boundaries():
    flat = [p for block in prime_blocks(1, 10**5, segment_size=1 << 10) for p in block]
    assert flat == list(primes_in(2, 10**5))
    assert flat[0] == 2 and flat[-1] == 99991
    assert len(flat) == 9592


def test_spf_table_factors():
    spf = smallest_prime_factor_table(10_000)
    for n in range(2, 10_001):
        pairs = factor_with_spf(n, spf)
        v = 1
        for p, a in pairs:
            assert is_prime(p)
            v *= p**a
        assert v == n
        assert pairs[0][0] == min(q for q, _ in pairs)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert f.value == n
    for p, a in f.pairs:
        assert is_prime(p) and a >= 1
    assert list(f.pairs) == sorted(f.pairs)


def test_factorize_known_shapes():
    assert factorize(945).pairs == ((3, 3), (5, 1), (7, 1))
    assert str(factorize(945)) == "3^3*5*7"
    assert factorize(198585576189).pairs == (
        (3, 2), (7, 2), (11, 2), (13, 2), (19, 2), (61, 1),
    )
    assert factorize(1).pairs == ()
    assert factorize(2**64).pairs == ((2, 64),)


def test_factor_pairs_budget_semantics():
    # two 30-bit primes: trial division alone cannot split this, but the
    # rho budget is ample (expected cost scales like sqrt of the factor)
    p = 1073741827
    q = 1073742077
    assert is_prime(p) and is_prime(q)
    pairs, cofactor = factor_pairs(p * q, trial_limit=1000, rho_iters=0)
    assert pairs == [] and cofactor == p * q
    pairs, cofactor = factor_pairs(p * q, trial_limit=1000, rho_iters=500_000)
    assert cofactor == 1 and pairs == [(p, 1), (q, 1)]


def test_factor_pairs_prime_power_remainder():
    # remainder after trial is a prime square; no rho needed
    pairs, cofactor = factor_pairs(10_000_019**2, trial_limit=100, rho_iters=0)
    assert pairs == [(10_000_019, 2)] and cofactor == 1


def test_factorization_validation():
    with pytest.raises(FactorizationError):
        Factorization.from_pairs([(4, 1)])
    with pytest.raises(FactorizationError):
        Factorization.from_pairs([(3, 0)])
    with pytest.raises(FactorizationError):
        Factorization.from_pairs([(5, 1), (3, 1)])  # not ascending
    f = Factorization.from_pairs([(3, 3), (5, 1), (7, 1)])
    assert f.smallest_prime == 3 and f.largest_prime == 7
    assert f.num_primes == 3 and f.value == 945


def test_iroot():
    for n in (0, 1, 7, 26, 27, 28, 10**18):
        for k in (1, 2, 3, 5):
            r = iroot(n, k)
            assert r**k <= n < (r + 1) ** k
