"""Integer kernel: factorization, primality, and prime streams.

Everything here is exact integer arithmetic. Primality testing is
deterministic Miller-Rabin for inputs below the published 13-witness
bound (about 3.3e24, comfortably covering 64 bits) and a fixed 40-round
strong probable-prime battery above it, with the certainty level exposed
so downstream reports can say which one they got. Factoring runs trial
division up to a configurable bound and then Pollard rho (Brent variant)
under a caller-supplied iteration budget; whatever the budget cannot
split is returned explicitly as a cofactor, never silently dropped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Iterator, Optional

# Exact rational scalar used across the package. Always reduced, exact,
# positive denominator; stdlib Fraction guarantees all three.
Rational = Fraction

# Largest n for which the 13-witness Miller-Rabin battery is proven
# deterministic (Sorenson-Webster), well past 2^64.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Fixed battery above the deterministic range: first 40 primes.
_MR_BATTERY = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173,
)

TRIAL_LIMIT_DEFAULT = 1_000_000
RHO_ITERS_DEFAULT = 500_000
SEGMENT_SIZE_DEFAULT = 1 << 22


class FactorizationError(ValueError):
    """Invalid factorization input (bad pair list, nonpositive n, ...)."""


class IncompleteFactorization(FactorizationError):
    """Raised by factorize() when the budget leaves an unsplit cofactor."""

    def __init__(self, n: int, pairs: tuple, cofactor: int):
        self.n = n
        self.pairs = pairs
        self.cofactor = cofactor
        super().__init__(
            f"budget exhausted factoring {n}: cofactor {cofactor} unsplit"
        )


def _mr_witness_composite(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def prime_certainty(n: int) -> str:
    """Classify n as 'composite', 'prime', or 'probable prime'.

    'prime' is deterministic (small cases and the 13-witness range);
    'probable prime' means the fixed 40-round battery found no witness.
    """
    if n < 2:
        return "composite"
    for p in _MR_WITNESSES:
        if n == p:
            return "prime"
        if n % p == 0:
            return "composite"
    if n < _MR_DETERMINISTIC_BOUND:
        for a in _MR_WITNESSES:
            if _mr_witness_composite(n, a):
                return "composite"
        return "prime"
    for a in _MR_BATTERY:
        if _mr_witness_composite(n, a):
            return "composite"
    return "probable prime"


def is_prime(n: int) -> bool:
    """Primality predicate; deterministic below ~3.3e24, 40-round above."""
    return prime_certainty(n) != "composite"


# ---------------------------------------------------------------------------
# Prime sieves and streams

_trial_primes: list[int] = []
_trial_limit_cached = 0


def _simple_sieve(limit: int) -> list[int]:
    """All primes <= limit by a plain odd-only sieve."""
    if limit < 2:
        return []
    if limit < 3:
        return [2]
    half = (limit - 1) // 2 + 1  # index i holds 2i+1
    mark = bytearray([1]) * half
    mark[0] = 0
    for i in range(1, (isqrt(limit) - 1) // 2 + 1):
        if mark[i]:
            p = 2 * i + 1
            start = (p * p - 1) // 2
            mark[start::p] = bytearray(len(range(start, half, p)))
    return [2] + [2 * i + 1 for i in range(half) if mark[i]]


def _primes_for_trial(limit: int) -> list[int]:
    """Cached ascending primes to at least limit (grown on demand)."""
    global _trial_primes, _trial_limit_cached
    if limit > _trial_limit_cached:
        _trial_primes = _simple_sieve(limit)
        _trial_limit_cached = limit
    return _trial_primes


def prime_blocks(
    lo: int, hi: int, segment_size: int = SEGMENT_SIZE_DEFAULT
) -> Iterator[list[int]]:
    """Yield the primes in [lo, hi] as consecutive list blocks.

    Segmented sieve; memory stays O(segment_size + sqrt(hi)).
    """
    if hi < 2 or hi < lo:
        return
    lo = max(lo, 2)
    base = _primes_for_trial(isqrt(hi) + 1)
    seg_lo = lo
    while seg_lo <= hi:
        seg_hi = min(seg_lo + segment_size - 1, hi)
        size = seg_hi - seg_lo + 1
        mark = bytearray([1]) * size
        for p in base:
            if p * p > seg_hi:
                break
            if p == 2:
                continue  # even offsets are never inspected below
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            mark[start - seg_lo :: 2 * p] = bytearray(
                len(range(start - seg_lo, size, 2 * p))
            )
        block = [2] if seg_lo <= 2 <= seg_hi else []
        first_odd = seg_lo | 1
        if first_odd == 1:
            first_odd = 3
        block += [
            v for v in range(first_odd, seg_hi + 1, 2) if mark[v - seg_lo]
        ]
        yield block
        seg_lo = seg_hi + 1


def primes_in(
    lo: int, hi: int, segment_size: int = SEGMENT_SIZE_DEFAULT
) -> Iterator[int]:
    """Ordered stream of primes p with lo <= p <= hi."""
    for block in prime_blocks(lo, hi, segment_size):
        yield from block


def smallest_prime_factor_table(limit: int) -> list[int]:
    """spf[n] = smallest prime factor of n for 0 <= n <= limit (spf[0]=spf[1]=0)."""
    spf = list(range(limit + 1))
    if limit >= 1:
        spf[1] = 0
    if limit >= 0:
        spf[0] = 0
    for i in range(4, limit + 1, 2):
        spf[i] = 2
    for p in range(3, isqrt(limit) + 1, 2):
        if spf[p] == p:
            for m in range(p * p, limit + 1, 2 * p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factor_with_spf(n: int, spf: list[int]) -> list[tuple[int, int]]:
    """Factor n <= len(spf)-1 via a precomputed spf table."""
    pairs = []
    while n > 1:
        p = spf[n]
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        pairs.append((p, a))
    return pairs


# ---------------------------------------------------------------------------
# Integer roots and perfect powers

def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (-(-n.bit_length() // k))  # upper estimate
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _as_prime_power(n: int) -> Optional[tuple[int, int]]:
    """(b, k) with n = b^k and k maximal if n is a perfect power, else None."""
    for k in range(n.bit_length(), 1, -1):
        b = iroot(n, k)
        if b < 2:
            continue
        if b**k == n:
            return b, k
    return None


# ---------------------------------------------------------------------------
# Pollard rho (Brent) with explicit budget

def _brent_split(n: int, budget: int, rng: random.Random) -> tuple[Optional[int], int]:
    """Try to find a proper factor of composite odd n.

    Returns (factor or None, budget left). Budget counts f-iterations.
    """
    while budget > 0:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and budget > 0:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1 and budget > 0:
                ys = y
                steps = min(m, r - k, budget)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget -= steps
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, budget
    return None, budget


def factor_pairs(
    n: int,
    *,
    trial_limit: int = TRIAL_LIMIT_DEFAULT,
    rho_iters: int = RHO_ITERS_DEFAULT,
    seed: int = 0,
) -> tuple[list[tuple[int, int]], int]:
    """Factor n >= 1 as (sorted prime pairs, cofactor).

    cofactor == 1 means complete. A cofactor > 1 is a product of
    composites the rho budget could not split; it never has a prime
    factor <= min(trial_limit, sqrt reached by trial division).
    """
    if n < 1:
        raise FactorizationError(f"cannot factor {n}: need n >= 1")
    found: dict[int, int] = {}
    for p in _primes_for_trial(trial_limit):
        # the cache may extend beyond trial_limit; honor the budget
        if p > trial_limit or p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1 and isqrt(n) < trial_limit:
        # trial division reached past sqrt(n): remainder is prime
        found[n] = found.get(n, 0) + 1
        n = 1
    cofactor = 1
    if n > 1:
        rng = random.Random((seed << 16) ^ (n & 0xFFFFFFFF))
        budget = rho_iters
        stack: list[tuple[int, int]] = [(n, 1)]  # (value, multiplicity)
        while stack:
            m, mult = stack.pop()
            if is_prime(m):
                found[m] = found.get(m, 0) + mult
                continue
            power = _as_prime_power(m)
            if power is not None:
                b, k = power
                stack.append((b, mult * k))
                continue
            fac, budget = _brent_split(m, budget, rng)
            if fac is None:
                cofactor *= m**mult
                continue
            stack.append((fac, mult))
            stack.append((m // fac, mult))
    pairs = sorted(found.items())
    return pairs, cofactor


@dataclass(frozen=True)
class Factorization:
    """A complete prime factorization: ((p1, a1), ..., (pk, ak)), p1 < ... < pk.

    Use from_pairs() for validated construction; factorize() for integers.
    """

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        pairs = tuple((int(p), int(a)) for p, a in pairs)
        for p, a in pairs:
            if a < 1:
                raise FactorizationError(f"exponent {a} of {p} must be >= 1")
            if not is_prime(p):
                raise FactorizationError(f"base {p} is not prime")
        for (p, _), (q, _) in zip(pairs, pairs[1:]):
            if p >= q:
                raise FactorizationError("primes must be strictly increasing")
        return cls(pairs)

    @classmethod
    def _trusted(cls, pairs) -> "Factorization":
        return cls(tuple(pairs))

    @cached_property
    def value(self) -> int:
        n = 1
        for p, a in self.pairs:
            n *= p**a
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.pairs)

    @property
    def num_primes(self) -> int:
        return len(self.pairs)

    @property
    def smallest_prime(self) -> int:
        if not self.pairs:
            raise FactorizationError("1 has no prime factors")
        return self.pairs[0][0]

    @property
    def largest_prime(self) -> int:
        if not self.pairs:
            raise FactorizationError("1 has no prime factors")
        return self.pairs[-1][0]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        return "*".join(
            f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs
        )


def factorize(
    n: int,
    *,
    trial_limit: int = TRIAL_LIMIT_DEFAULT,
    rho_iters: int = RHO_ITERS_DEFAULT,
    seed: int = 0,
) -> Factorization:
    """Complete factorization of n >= 1; IncompleteFactorization if budget fails."""
    pairs, cofactor = factor_pairs(
        n, trial_limit=trial_limit, rho_iters=rho_iters, seed=seed
    )
    if cofactor != 1:
        raise IncompleteFactorization(n, tuple(pairs), cofactor)
    return Factorization._trusted(pairs)
