"""Multiplicative and additive functions of a factored integer.

All results are exact (int or Fraction). Every function accepts either a
positive integer or a Factorization; integers are factored on the way in,
so hot loops should factor once and pass the Factorization around.

Conventions at n = 1 (empty factorization): sigma = 1, abundancy = 1,
abundancy_limit = 1, surplus = -1, prime sums = 0, derivative = 0,
radical = 1.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Union

from .numkernel import Factorization, factorize

FactorizationLike = Union[int, Factorization]


class Classification(Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


def _as_factorization(n: FactorizationLike) -> Factorization:
    if isinstance(n, Factorization):
        return n
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    return factorize(n)


def _sigma_prime_power(p: int, a: int) -> int:
    return (p ** (a + 1) - 1) // (p - 1)


def sigma(n: FactorizationLike) -> int:
    """Sum of all positive divisors."""
    f = _as_factorization(n)
    out = 1
    for p, a in f:
        out *= _sigma_prime_power(p, a)
    return out


def abundancy(n: FactorizationLike) -> Fraction:
    """sigma(n)/n, the abundancy index. >= 2 means non-deficient."""
    f = _as_factorization(n)
    return Fraction(sigma(f), f.value)


def abundancy_limit(n: FactorizationLike) -> Fraction:
    """prod p/(p-1) over the distinct primes of n.

    Strict supremum of the abundancy over all integers with the same
    radical; every divisor-structure bound in this package compares
    against it.
    """
    f = _as_factorization(n)
    num = den = 1
    for p, _ in f:
        num *= p
        den *= p - 1
    return Fraction(num, den)


def surplus(n: FactorizationLike) -> Fraction:
    """abundancy_limit(n) - 2. Positive for every non-deficient n."""
    return abundancy_limit(n) - 2


def prime_reciprocal_sum(n: FactorizationLike) -> Fraction:
    """Sum of 1/p over the distinct primes of n."""
    f = _as_factorization(n)
    return sum((Fraction(1, p) for p, _ in f), Fraction(0))


def prime_cofactor_sum(n: FactorizationLike) -> int:
    """n times prime_reciprocal_sum(n): the integer sum of n/p over p | n."""
    f = _as_factorization(n)
    v = f.value
    return sum(v // p for p, _ in f)


def arithmetic_derivative(n: FactorizationLike) -> int:
    """Leibniz-rule derivative: D(p) = 1 for primes, D(mn) = m D(n) + n D(m).

    Equals n * sum(a_i / p_i) over the factorization.
    """
    f = _as_factorization(n)
    v = f.value
    return sum(v // p * a for p, a in f)


def radical(n: FactorizationLike) -> int:
    """Product of the distinct primes of n."""
    f = _as_factorization(n)
    out = 1
    for p, _ in f:
        out *= p
    return out


def odd_part(n: int) -> int:
    """Largest odd divisor of n >= 1."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    return n >> ((n & -n).bit_length() - 1)


def classify(n: FactorizationLike) -> Classification:
    f = _as_factorization(n)
    s = sigma(f)
    two_n = 2 * f.value
    if s < two_n:
        return Classification.DEFICIENT
    if s == two_n:
        return Classification.PERFECT
    return Classification.ABUNDANT


def is_nondeficient(n: FactorizationLike) -> bool:
    """sigma(n) >= 2n."""
    f = _as_factorization(n)
    return sigma(f) >= 2 * f.value


def is_primitive_nondeficient(n: FactorizationLike) -> bool:
    """Non-deficient with every proper divisor deficient.

    Non-deficiency is inherited upward by multiples, so it is enough to
    check the maximal proper divisors n/p for p | n.
    """
    f = _as_factorization(n)
    if not f.pairs:
        return False
    s = sigma(f)
    v = f.value
    if s < 2 * v:
        return False
    for p, a in f:
        # sigma and value of n/p differ from n only in the p-component
        s_reduced = s // _sigma_prime_power(p, a) * _sigma_prime_power(p, a - 1)
        if s_reduced * p >= 2 * v:  # h(n/p) = s_reduced / (v/p)
            return False
    return True
