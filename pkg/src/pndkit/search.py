"""Budgeted witness searches around the special-prime questions.

The searched predicates all have the shape: does some prime p make
H(odd(V)) < 2 < H(p odd(V)) for a structured value V? V is often far
too large to factor, so every search runs on partial factorizations and
only three outcomes are reported per cell: certified witness, certified
non-witness, or Inconclusive with the factoring state attached. A lower
bound on H needs only a subset of the prime factors, which is what makes
the one-sided certificates possible; the strict-below-2 side always
needs the complete factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from . import divfun
from .numkernel import (
    Factorization,
    factor_pairs,
    is_prime,
    primes_in,
    _primes_for_trial,
)


# ---------------------------------------------------------------------------
# Partial factorizations and one-sided H bounds

@dataclass(frozen=True)
class PartialFactorization:
    """Known prime pairs plus an unfactored cofactor.

    value = cofactor * prod p^a; the cofactor has no prime factor below
    trial_floor (enforced by the constructors, recorded for reporting).
    """

    pairs: tuple[tuple[int, int], ...]
    cofactor: int
    trial_floor: int

    def __post_init__(self):
        if self.cofactor < 1:
            raise ValueError("cofactor must be >= 1")
        seen = set()
        for p, a in self.pairs:
            if a < 1:
                raise ValueError(f"exponent {a} for prime {p} must be >= 1")
            if p in seen:
                raise ValueError(f"repeated prime {p}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            seen.add(p)

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def value(self) -> int:
        v = self.cofactor
        for p, a in self.pairs:
            v *= p**a
        return v

    @classmethod
    def from_factorization(cls, f: Factorization) -> "PartialFactorization":
        return cls(f.pairs, 1, 2)

    @classmethod
    def factor_budgeted(
        cls,
        n: int,
        *,
        trial_limit: int = 10_000,
        rho_iters: int = 200_000,
        rho_bit_cap: int = 160,
        seed: int = 0,
    ) -> "PartialFactorization":
        """Best-effort factorization: trial division always, rho only
        when the remaining cofactor is small enough to be worth it."""
        if n < 1:
            raise ValueError("n must be >= 1")
        pairs, cofactor = factor_pairs(
            n, trial_limit=trial_limit, rho_iters=0, seed=seed
        )
        if cofactor > 1 and cofactor.bit_length() <= rho_bit_cap:
            more, cofactor = factor_pairs(
                cofactor, trial_limit=2, rho_iters=rho_iters, seed=seed
            )
            merged = dict(pairs)
            for p, a in more:
                merged[p] = merged.get(p, 0) + a
            pairs = sorted(merged.items())
        return cls(tuple(pairs), cofactor, trial_limit)


@dataclass(frozen=True)
class HBoundResult:
    """One-sided certificate about H(value) relative to 2."""

    h_lower: Fraction
    complete: bool
    verdict: str  # CertifiedBelow2 | CertifiedAbove2 | Inconclusive

    @property
    def certified(self) -> bool:
        return self.verdict != "Inconclusive"


def _H_of_primes(primes: Iterable[int]) -> Fraction:
    h = Fraction(1)
    for p in primes:
        h *= Fraction(p, p - 1)
    return h


def H_partial(pf: PartialFactorization) -> HBoundResult:
    """Certify H(pf.value) against 2 from the known primes.

    Known primes give a lower bound on H regardless of the cofactor
    (extra primes only raise H), so > 2 certifies from partial data
    while < 2 additionally needs completeness."""
    h = _H_of_primes(p for p, _ in pf.pairs)
    if h > 2:
        return HBoundResult(h, pf.complete, "CertifiedAbove2")
    if pf.complete and h < 2:
        return HBoundResult(h, True, "CertifiedBelow2")
    return HBoundResult(h, pf.complete, "Inconclusive")


# ---------------------------------------------------------------------------
# Cyclotomic evaluation

def moebius(m: int) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return 1
    from .numkernel import factorize

    f = factorize(m)
    if any(a > 1 for _, a in f.pairs):
        return 0
    return -1 if f.num_primes % 2 else 1


def _divisors(m: int) -> list[int]:
    from .numkernel import factorize

    divs = [1]
    for p, a in factorize(m).pairs:
        divs = [d * p**i for d in divs for i in range(a + 1)]
    return sorted(divs)


def cyclotomic_value(m: int, x: int) -> int:
    """Phi_m(x) via the Moebius product prod (x^{m/d} - 1)^{mu(d)}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if x < 2:
        raise ValueError("x must be >= 2 (roots of unity excluded)")
    num = 1
    den = 1
    for d in _divisors(m):
        mu = moebius(d)
        if mu == 1:
            num *= x ** (m // d) - 1
        elif mu == -1:
            den *= x ** (m // d) - 1
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"cyclotomic product not exact for m={m}, x={x}")
    return q


def sigma_prime_power_split(p: int, a: int) -> list[tuple[int, int]]:
    """sigma(p^a) = prod_{d | a+1, d > 1} Phi_d(p), as (d, Phi_d(p)) parts."""
    return [(d, cyclotomic_value(d, p)) for d in _divisors(a + 1) if d > 1]


# ---------------------------------------------------------------------------
# Scan reports

@dataclass(frozen=True)
class ScanCell:
    cell: tuple[int, ...]
    verdict: str  # witness | non-witness | inconclusive
    h_lower: Fraction
    h_with_p: Fraction
    complete: bool
    note: str = ""

    def to_json(self, question: str = "") -> dict:
        notes = [f"H(p*V) lower bound {self.h_with_p}"]
        if self.note:
            notes.append(self.note)
        out = {
            "cell": list(self.cell),
            "verdict": self.verdict,
            "h_lower_num": self.h_lower.numerator,
            "h_lower_den": self.h_lower.denominator,
            "complete": self.complete,
            "notes": notes,
        }
        if question:
            out = {"question": question, **out}
        return out


@dataclass(frozen=True)
class ScanReport:
    question: str
    params: tuple[tuple[str, int], ...]
    cells_scanned: int
    non_witnesses: int
    witnesses: tuple[ScanCell, ...]
    inconclusive: tuple[ScanCell, ...]

    @property
    def clean(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        out = {"question": self.question}
        out.update(self.params)
        out["cells_scanned"] = self.cells_scanned
        out["non_witnesses"] = self.non_witnesses
        out["witnesses"] = [c.to_json() for c in self.witnesses]
        out["inconclusive"] = [c.to_json() for c in self.inconclusive]
        return out

    def json_lines(self) -> Iterator[dict]:
        """One record per reportable cell, then a summary record."""
        for c in self.witnesses:
            yield c.to_json(self.question)
        for c in self.inconclusive:
            yield c.to_json(self.question)
        yield self.to_json()


def _classify_cell(
    cell: tuple[int, ...], p: int, pf: PartialFactorization
) -> ScanCell:
    """Decide H(V) < 2 < H(pV) for V = pf.value with p not dividing V.

    Witness needs both halves certified; one failed half certifies a
    non-witness; anything else is inconclusive."""
    hb = H_partial(pf)
    h_with_p = hb.h_lower * Fraction(p, p - 1)
    if hb.verdict == "CertifiedAbove2":
        return ScanCell(cell, "non-witness", hb.h_lower, h_with_p, pf.complete)
    if pf.complete:
        below = hb.h_lower < 2
        above = h_with_p > 2
        verdict = "witness" if (below and above) else "non-witness"
        return ScanCell(cell, verdict, hb.h_lower, h_with_p, True)
    # incomplete, known part <= 2: the first half is undecidable; the
    # second can still be certified one-sidedly but cannot close the cell
    note = "cofactor unfactored"
    if h_with_p > 2:
        note += "; H(p*V) > 2 already certified"
    return ScanCell(cell, "inconclusive", hb.h_lower, h_with_p, False, note)


# ---------------------------------------------------------------------------
# Question scans

def search_question1(
    p_limit: int,
    *,
    trial_limit: int = 10_000,
    factor_budget: int = 200_000,
    seed: int = 0,
) -> ScanReport:
    """Scan odd primes p <= p_limit for H(sigma(p^2)) < 2 < H(p sigma(p^2)).

    sigma(p^2) = p^2 + p + 1 is odd and coprime to p, so no odd-part
    normalization is needed and H(p V) = H(V) p/(p-1)."""
    witnesses = []
    inconclusive = []
    scanned = 0
    non_witnesses = 0
    for p in primes_in(3, p_limit):
        scanned += 1
        pf = PartialFactorization.factor_budgeted(
            p * p + p + 1,
            trial_limit=trial_limit,
            rho_iters=factor_budget,
            seed=seed,
        )
        cell = _classify_cell((p,), p, pf)
        if cell.verdict == "witness":
            witnesses.append(cell)
        elif cell.verdict == "inconclusive":
            inconclusive.append(cell)
        else:
            non_witnesses += 1
    return ScanReport(
        "question1",
        (("p_limit", p_limit),),
        scanned,
        non_witnesses,
        tuple(witnesses),
        tuple(inconclusive),
    )


def search_question2(
    m_limit: int,
    p_limit: int,
    *,
    trial_limit: int = 10_000,
    factor_budget: int = 200_000,
    rho_bit_cap: int = 160,
    seed: int = 0,
) -> ScanReport:
    """Scan cyclotomic values Phi_m(p) for 1 <= m <= m_limit and odd
    primes p <= p_limit, testing H(odd(Phi)) < 2 < H(p odd(Phi)).

    Phi_m(p) never carries the factor p (its value at 0 is a unit for
    m >= 2, and Phi_1(p) = p - 1), so appending p is always a new prime.
    Values too large for the budget are reported Inconclusive."""
    witnesses = []
    inconclusive = []
    scanned = 0
    non_witnesses = 0
    for m in range(1, m_limit + 1):
        for p in primes_in(3, p_limit):
            scanned += 1
            v = divfun.odd_part(cyclotomic_value(m, p))
            if v == 1:
                # H(1) = 1 < 2 and H(p)/1 = p/(p-1) < 2: never a witness
                pf = PartialFactorization((), 1, trial_limit)
            else:
                pf = PartialFactorization.factor_budgeted(
                    v,
                    trial_limit=trial_limit,
                    rho_iters=factor_budget,
                    rho_bit_cap=rho_bit_cap,
                    seed=seed,
                )
            cell = _classify_cell((m, p), p, pf)
            if cell.verdict == "witness":
                witnesses.append(cell)
            elif cell.verdict == "inconclusive":
                inconclusive.append(cell)
            else:
                non_witnesses += 1
    return ScanReport(
        "question2",
        (("m_limit", m_limit), ("p_limit", p_limit)),
        scanned,
        non_witnesses,
        tuple(witnesses),
        tuple(inconclusive),
    )


def _partial_of_structured(
    value: int,
    parts: Sequence[int],
    *,
    trial_limit: int,
    factor_budget: int,
    rho_bit_cap: int,
    seed: int,
) -> PartialFactorization:
    """Partial factorization of value (odd) by harvesting primes from the
    given multiplicative parts, then recounting multiplicities in value."""
    found: set[int] = set()
    for part in parts:
        pf = PartialFactorization.factor_budgeted(
            part,
            trial_limit=trial_limit,
            rho_iters=factor_budget,
            rho_bit_cap=rho_bit_cap,
            seed=seed,
        )
        found.update(p for p, _ in pf.pairs)
    pairs = []
    rest = value
    for p in sorted(found):
        a = 0
        while rest % p == 0:
            rest //= p
            a += 1
        if a:
            pairs.append((p, a))
    return PartialFactorization(tuple(pairs), rest, trial_limit)


def search_question3(
    p_limit: int,
    a_limit: int,
    *,
    trial_limit: int = 10_000,
    factor_budget: int = 200_000,
    rho_bit_cap: int = 160,
    seed: int = 0,
) -> ScanReport:
    """Scan odd primes p <= p_limit and even exponents a <= a_limit for
    H(odd(sigma(p^a))) < 2 < H(p odd(sigma(p^a))).

    sigma(p^a) for even a is odd (a+1 odd terms, all odd), and the
    cyclotomic splitting sigma(p^a) = prod_{d | a+1, d>1} Phi_d(p) seeds
    the factor harvest with much smaller integers."""
    witnesses = []
    inconclusive = []
    scanned = 0
    non_witnesses = 0
    for p in primes_in(3, p_limit):
        for a in range(2, a_limit + 1, 2):
            scanned += 1
            parts = [v for _, v in sigma_prime_power_split(p, a)]
            value = 1
            for v in parts:
                value *= v
            pf = _partial_of_structured(
                divfun.odd_part(value),
                parts,
                trial_limit=trial_limit,
                factor_budget=factor_budget,
                rho_bit_cap=rho_bit_cap,
                seed=seed,
            )
            cell = _classify_cell((p, a), p, pf)
            if cell.verdict == "witness":
                witnesses.append(cell)
            elif cell.verdict == "inconclusive":
                inconclusive.append(cell)
            else:
                non_witnesses += 1
    return ScanReport(
        "question3",
        (("p_limit", p_limit), ("a_limit", a_limit)),
        scanned,
        non_witnesses,
        tuple(witnesses),
        tuple(inconclusive),
    )


def sigma_power_anchor(
    p: int,
    a: int,
    *,
    trial_limit: int = 100_000,
    factor_budget: int = 200_000,
    rho_bit_cap: int = 160,
    seed: int = 0,
) -> ScanCell:
    """Single regression cell for sigma(p^a): tests
    H(odd(sigma(p^a))) < 2 < H(p odd(sigma(p^a))).

    For odd a, sigma(p^a) is even, so the odd part matters: 5^5 closes
    completely (odd part 1953 = 3^2*7*31, H = 217/120, times 5/4 gives
    217/96 > 2). Huge even exponents like 7^944 cannot be factored, but
    the cyclotomic harvest can still certify the > 2 half one-sidedly;
    the < 2 half stays Inconclusive."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if a < 1:
        raise ValueError("a must be a positive exponent")
    parts = [v for _, v in sigma_prime_power_split(p, a)]
    value = 1
    for v in parts:
        value *= v
    pf = _partial_of_structured(
        divfun.odd_part(value),
        parts,
        trial_limit=trial_limit,
        factor_budget=factor_budget,
        rho_bit_cap=rho_bit_cap,
        seed=seed,
    )
    return _classify_cell((p, a), p, pf)


# ---------------------------------------------------------------------------
# Constructive search for inputs meeting the strict shape hypotheses

REFERENCE_SHAPE_CANDIDATE = (
    (3, 2),
    (5, 1),
    (11, 2),
    (13, 2),
    (17, 2),
    (19, 2),
    (23, 2),
)


@dataclass(frozen=True)
class HypothesisEvaluation:
    pairs: tuple[tuple[int, int], ...]
    hypotheses: tuple[tuple[str, bool], ...]
    note: str = ""

    @property
    def all_met(self) -> bool:
        return all(ok for _, ok in self.hypotheses)


@dataclass(frozen=True)
class Prop3SearchReport:
    prime_floor: int
    configs_tried: int
    witnesses: tuple[Factorization, ...]
    reference: HypothesisEvaluation


def evaluate_shape_hypotheses(
    pairs: Sequence[tuple[int, int]], *, prime_floor: int = 11
) -> HypothesisEvaluation:
    """Which of the strict-shape hypotheses (primitive non-deficient,
    exactly one odd exponent, (p_t+2)/2 >= p_1 >= prime_floor) a
    factorization meets, with exact-arithmetic reasons."""
    f = Factorization.from_pairs(pairs)
    pnd = divfun.is_primitive_nondeficient(f)
    odd_pos = [i for i, (_, a) in enumerate(f.pairs) if a % 2 == 1]
    one_odd = len(odd_pos) == 1
    p1 = f.smallest_prime
    floor_ok = p1 >= prime_floor
    position_ok = bool(
        one_odd and Fraction(f.pairs[odd_pos[0]][0] + 2, 2) >= p1
    )
    notes = []
    if not pnd:
        if divfun.is_nondeficient(f):
            bad = []
            for p, a in f.pairs:
                reduced = tuple(
                    (q, b - 1 if q == p else b)
                    for q, b in f.pairs
                    if q != p or b > 1
                )
                if divfun.is_nondeficient(Factorization._trusted(reduced)):
                    bad.append(p)
            notes.append(
                f"non-deficient but not primitive: n/p stays non-deficient for p in {bad}"
            )
        else:
            notes.append(f"deficient: h = {divfun.abundancy(f)} < 2")
    if not floor_ok:
        notes.append(f"smallest prime {p1} is below the floor {prime_floor}")
    if not one_odd:
        notes.append(f"{len(odd_pos)} odd exponents")
    return HypothesisEvaluation(
        f.pairs,
        (
            ("primitive-nondeficient", pnd),
            ("one-odd-exponent", one_odd),
            (f"p1-at-least-{prime_floor}", floor_ok),
            ("odd-position-prime-large-enough", position_ok),
        ),
        "; ".join(notes),
    )


def _prop3_candidate(base: list[int], t: int) -> Optional[Factorization]:
    """n = prod q^2 over base primes, times t^1: exact primitive
    non-deficiency test. Returns the factorization if primitive."""
    pairs = sorted([(q, 2) for q in base] + [(t, 1)])
    f = Factorization._trusted(tuple(pairs))
    if divfun.is_primitive_nondeficient(f):
        return f
    return None


def search_prop3_witness(
    *,
    prime_floor: int = 11,
    max_primes: int = 40,
    max_configs: int = 2_000,
) -> Prop3SearchReport:
    """Construct primitive non-deficient numbers with every prime factor
    at least prime_floor and exactly one odd exponent.

    Strategy: take consecutive primes q_1 < ... < q_r from the floor,
    all squared, optionally skipping one interior prime, so that
    h(base) < 2; then append a single prime t with exponent 1 chosen in
    the exact rational window where the total is non-deficient but every
    maximal proper divisor is deficient. Windows are narrow, so many
    configurations are tried; all arithmetic is exact.

    The bundled reference configuration (small smallest prime) is
    evaluated against the hypotheses alongside, as a reminder of why the
    floor matters."""
    reference = evaluate_shape_hypotheses(
        REFERENCE_SHAPE_CANDIDATE, prime_floor=prime_floor
    )
    pool = [p for p in _primes_for_trial(10_000) if p >= prime_floor]
    witnesses = []
    configs = 0
    for r in range(2, max_primes + 1):
        if configs >= max_configs or len(witnesses) >= 3:
            break
        run = pool[: r + 1]  # one spare for skip variants
        # variant 0: first r primes; variant i >= 1: r+1 primes minus run[i]
        # (the floor prime is never dropped, so p_1 stays at the floor)
        for skip in range(0, r):
            if configs >= max_configs:
                break
            if skip == 0:
                base = run[:r]
            else:
                base = run[:skip] + run[skip + 1 :]
            h_base = Fraction(1)
            for q in base:
                h_base *= Fraction(q * q + q + 1, q * q)
            if h_base >= 2:
                continue
            configs += 1
            # window: h_base (1 + 1/t) >= 2, and shrinking by the worst
            # maximal-divisor ratio must drop below 2
            t_max = h_base / (2 - h_base)  # t <= t_max keeps h >= 2
            q_top = base[-1]
            slack = Fraction(q_top * q_top + q_top + 1, q_top * q_top + q_top)
            t_min_bound = h_base / (2 * slack - h_base)
            lo = max(int(t_min_bound), q_top)
            hi = int(t_max)
            if hi <= lo:
                continue
            for t in primes_in(lo + 1, hi):
                cand = _prop3_candidate(base, t)
                if cand is not None:
                    witnesses.append(cand)
                    break
    return Prop3SearchReport(
        prime_floor, configs, tuple(witnesses), reference
    )
