"""Streaming enumeration of primitive non-deficient numbers, plus fixtures.

A primitive non-deficient number satisfies sigma(n) >= 2n while every
proper divisor is deficient; upward closure of non-deficiency means only
the maximal proper divisors n/p need checking. Enumeration sieves sigma
over address segments (workers may process segments concurrently; output
order is restored by merging in address order) and re-derives the exact
factorization only for the rare non-deficient survivors.

Fixture files are plain text: '#' comment lines (the first of which
records the generating command), then one integer per line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence

from . import divfun
from .numkernel import Factorization, _primes_for_trial, factorize

SEGMENT_SIZE_DEFAULT = 1 << 18


def _sigma_segment(lo: int, hi: int, odd_only: bool) -> tuple[int, int, list[int]]:
    """sigma(n) for n in range(start, hi, step) with lo <= start.

    Returns (start, step, sigmas). Only odd n when odd_only.
    """
    if odd_only:
        start = lo | 1
        step = 2
    else:
        start = lo
        step = 1
    count = len(range(start, hi, step))
    if count == 0:
        return start, step, []
    rem = list(range(start, hi, step))
    sig = [1] * count
    base = _primes_for_trial(isqrt(hi - 1) + 1)
    for p in base:
        if p * p >= hi:
            break
        if odd_only and p == 2:
            continue
        # first index whose value is a multiple of p
        first = -start % p
        if odd_only:
            if first % 2:
                first += p  # align to odd multiples, spaced 2p
            first //= 2
            idx_step = p
        else:
            idx_step = p
        for i in range(first, count, idx_step):
            r = rem[i]
            s = 1
            q = 1
            while r % p == 0:
                r //= p
                q *= p
                s += q
            rem[i] = r
            sig[i] *= s
    for i in range(count):
        r = rem[i]
        if r > 1:
            sig[i] *= r + 1
    return start, step, sig


def iter_sigma(
    lo: int,
    hi: int,
    *,
    odd_only: bool = False,
    segment_size: int = SEGMENT_SIZE_DEFAULT,
) -> Iterator[tuple[int, int]]:
    """Yield (n, sigma(n)) for lo <= n < hi in increasing n."""
    lo = max(lo, 1)
    seg = lo
    while seg < hi:
        seg_hi = min(seg + segment_size, hi)
        start, step, sig = _sigma_segment(seg, seg_hi, odd_only)
        for i, s in enumerate(sig):
            yield start + i * step, s
        seg = seg_hi


def _pnd_in_segment(args: tuple[int, int, bool]) -> list[tuple[tuple[int, int], ...]]:
    """Worker: factorization pairs of primitive non-deficient n in [lo, hi)."""
    lo, hi, odd_only = args
    start, step, sig = _sigma_segment(lo, hi, odd_only)
    out = []
    for i, s in enumerate(sig):
        n = start + i * step
        if s >= 2 * n:
            f = factorize(n)
            if divfun.is_primitive_nondeficient(f):
                out.append(f.pairs)
    return out


def enumerate_primitive_nondeficient(
    limit: int,
    *,
    odd_only: bool = False,
    segment_size: int = SEGMENT_SIZE_DEFAULT,
    jobs: int = 1,
) -> Iterator[Factorization]:
    """Primitive non-deficient n <= limit in increasing order, factored.

    jobs > 1 sieves segments in a process pool; results are merged in
    address order, so output is identical for any jobs value.
    """
    if limit < 1:
        return
    tasks = [
        (seg, min(seg + segment_size, limit + 1), odd_only)
        for seg in range(1, limit + 1, segment_size)
    ]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            for pairs in _pnd_in_segment(task):
                yield Factorization._trusted(pairs)
        return
    with Pool(processes=min(jobs, os.cpu_count() or 1)) as pool:
        for block in pool.imap(_pnd_in_segment, tasks):
            for pairs in block:
                yield Factorization._trusted(pairs)


def perfect_numbers(limit: int) -> list[int]:
    """All n <= limit with sigma(n) = 2n, by direct sigma scan."""
    return [n for n, s in iter_sigma(1, limit + 1) if s == 2 * n]


def prime_cofactor_values(limit: int) -> list[int]:
    """prime_cofactor_sum(n) for n = 1..limit (sum of n/p over primes p | n)."""
    out = [0] * (limit + 1)
    for p in _primes_for_trial(limit if limit >= 2 else 2):
        if p > limit:
            break
        for m in range(p, limit + 1, p):
            out[m] += m // p
    return out[1:]


# ---------------------------------------------------------------------------
# Fixtures

FIXTURE_SEQUENCES = ("A000396", "A006039", "A069359")


def generate_fixture(sequence: str, limit: int) -> tuple[list[int], list[str]]:
    """Values plus header comment lines for one supported sequence prefix."""
    seq = sequence.upper()
    command = f"pndkit fixtures generate --sequence {seq} --limit {limit}"
    if seq == "A000396":
        values = perfect_numbers(limit)
        desc = f"perfect numbers (sigma(n) = 2n) with n <= {limit}"
    elif seq == "A006039":
        values = [
            f.value for f in enumerate_primitive_nondeficient(limit)
        ]
        desc = f"primitive non-deficient numbers n <= {limit}"
    elif seq == "A069359":
        values = prime_cofactor_values(limit)
        desc = f"sum of n/p over primes p | n, for n = 1..{limit}"
    else:
        raise ValueError(
            f"unsupported sequence {sequence!r}; known: {FIXTURE_SEQUENCES}"
        )
    header = [f"generated by: {command}", desc]
    return values, header


def write_fixture(path: str, values: Iterable[int], header: Sequence[str]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for v in values:
            fh.write(f"{v}\n")


def read_fixture(path: str) -> tuple[list[str], list[int]]:
    """(header comment lines, values). Blank lines are ignored."""
    header: list[str] = []
    values: list[int] = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                header.append(line[1:].strip())
                continue
            values.append(int(line))
    return header, values


@dataclass(frozen=True)
class CrosscheckReport:
    path: str
    compared: int
    stream_length: int
    fixture_length: int
    first_mismatch: Optional[tuple[int, int, int]]  # (index, fixture, stream)

    @property
    def matched(self) -> bool:
        return self.first_mismatch is None

    def __str__(self):
        if self.matched:
            return (
                f"{self.path}: {self.compared} values match "
                f"(stream {self.stream_length}, fixture {self.fixture_length})"
            )
        i, want, got = self.first_mismatch
        return f"{self.path}: mismatch at index {i}: fixture {want}, stream {got}"


def crosscheck_fixture(stream: Iterable[int], fixture_path: str) -> CrosscheckReport:
    """Compare a freshly computed stream against a fixture file prefix.

    Comparison covers the common prefix; index in the report is 0-based.
    """
    _, expected = read_fixture(fixture_path)
    got: list[int] = []
    mismatch = None
    for i, value in enumerate(stream):
        if i >= len(expected):
            break
        got.append(value)
        if mismatch is None and value != expected[i]:
            mismatch = (i, expected[i], value)
            break
    compared = len(got)
    return CrosscheckReport(
        path=fixture_path,
        compared=compared,
        stream_length=len(got),
        fixture_length=len(expected),
        first_mismatch=mismatch,
    )
