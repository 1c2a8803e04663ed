"""Spoof perfect factorizations.

A spoof factorization is a formal multiset of (base, exponent) pairs in
which bases are nonzero integers: they need not be prime, may repeat
(repeated copies are treated as distinct formal primes), and may be
negative. The formal divisor sum multiplies geometric sums
1 + x + ... + x^b per pair, so on an honest prime factorization it
agrees with sigma. Spoof perfect means that formal sum equals twice the
formal value. Bases of absolute value 1 are legal but degenerate (the
abundancy-style functions blow up on x = 1), so they are flagged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .numkernel import Factorization, is_prime

_TERM_RE = re.compile(
    r"""^\s*
        (?: \( \s* (?P<paren>-?\d+) \s* \) | (?P<plain>\d+) )
        \s* (?: \^ \s* (?P<exp>-?\d+) \s* )?
        $""",
    re.VERBOSE,
)


class SpoofParseError(ValueError):
    """Malformed spoof factorization text."""


@dataclass(frozen=True)
class SpoofFactorization:
    """Canonical (sorted) multiset of (base, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "SpoofFactorization":
        cleaned = []
        for item in pairs:
            x, b = item
            x = int(x)
            b = int(b)
            if x == 0:
                raise SpoofParseError("base 0 is not allowed")
            if b < 1:
                raise SpoofParseError(f"exponent {b} of base {x} must be >= 1")
            cleaned.append((x, b))
        return cls(tuple(sorted(cleaned)))

    @classmethod
    def from_factorization(cls, f: Factorization) -> "SpoofFactorization":
        return cls(tuple(f.pairs))

    @cached_property
    def value(self) -> int:
        n = 1
        for x, b in self.pairs:
            n *= x**b
        return n

    @property
    def bases(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def has_unit_base(self) -> bool:
        """True when some |base| = 1; downstream index functions degenerate."""
        return any(abs(x) == 1 for x, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return to_string(self)


def sigma_tilde(sf: SpoofFactorization) -> int:
    """Formal divisor sum: product over pairs of 1 + x + ... + x^b."""
    out = 1
    for x, b in sf.pairs:
        term = 0
        power = 1
        for _ in range(b + 1):
            term += power
            power *= x
        out *= term
    return out


def is_spoof_perfect(sf: SpoofFactorization) -> bool:
    """sigma_tilde(sf) == 2 * value(sf)."""
    return sigma_tilde(sf) == 2 * sf.value


def formal_prime_reciprocal_sum(sf: SpoofFactorization) -> Fraction:
    """Sum of 1/x per pair, each repeated copy counted as its own prime."""
    return sum((Fraction(1, x) for x, _ in sf.pairs), Fraction(0))


def formal_abundancy_limit(sf: SpoofFactorization) -> Fraction:
    """Product of x/(x-1) per pair. Undefined when some base is 1."""
    out = Fraction(1)
    for x, _ in sf.pairs:
        if x == 1:
            raise ValueError("abundancy limit undefined for base 1")
        out *= Fraction(x, x - 1)
    return out


def parse_spoof(text: str) -> SpoofFactorization:
    """Parse 'x^b*...' grammar: integer bases (negatives parenthesized),
    optional ^exponent defaulting to 1, '*' separated."""
    if not text or not text.strip():
        raise SpoofParseError("empty factorization text")
    pairs = []
    for term in text.split("*"):
        m = _TERM_RE.match(term)
        if m is None:
            raise SpoofParseError(
                f"bad term {term.strip()!r}: expected base or (base) "
                "optionally followed by ^exponent"
            )
        base = int(m.group("paren") if m.group("paren") is not None else m.group("plain"))
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        pairs.append((base, exp))
    return SpoofFactorization.from_pairs(pairs)


def to_string(sf: SpoofFactorization) -> str:
    """Canonical text form; parse_spoof(to_string(sf)) round-trips."""
    if not sf.pairs:
        return "1"
    parts = []
    for x, b in sf.pairs:
        base = f"({x})" if x < 0 else str(x)
        parts.append(f"{base}^{b}" if b > 1 else base)
    return "*".join(parts)


def to_exact_factorization(sf: SpoofFactorization) -> Factorization:
    """Collapse a spoof with positive prime bases into a checked
    Factorization (repeated bases merge by adding exponents)."""
    merged: dict[int, int] = {}
    for x, b in sf.pairs:
        if x < 2 or not is_prime(x):
            raise ValueError(f"base {x} is not a positive prime")
        merged[x] = merged.get(x, 0) + b
    return Factorization.from_pairs(sorted(merged.items()))
