"""Bound checks for primitive non-deficient numbers and OPN candidates.

Every check returns a BoundCheckRecord: hypotheses are evaluated first
and a violated hypothesis produces a Skipped record naming it (never a
silent pass), applicable inputs get a certified three-valued verdict.
Rational-only bounds are decided exactly; bounds involving logarithms go
through realcert with escalating precision, so a Holds or Fails is
always a certificate.

The analytic support lemmas (prime counting, nth prime, log refinement,
Taylor cushion, prime square tails) are verified here as finite sweeps
with certified arithmetic; their records aggregate a whole sweep.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, log as _float_log
from multiprocessing import Pool
from typing import Iterator, Optional, Sequence, Union

from . import divfun
from .numkernel import (
    Factorization,
    _primes_for_trial,
    factor_with_spf,
    factorize,
    prime_blocks,
    smallest_prime_factor_table,
)
from .realcert import (
    PRECISION_CAP_DEFAULT,
    CheckResult,
    Interval,
    Verdict,
    compare_certified,
    const,
    exp as e_exp,
    iv_add,
    iv_div,
    iv_log,
    iv_mul,
    iv_sub,
    log as e_log,
    LOG2,
)
from .spoof import (
    SpoofFactorization,
    formal_abundancy_limit,
    formal_prime_reciprocal_sum,
    sigma_tilde,
)

FactorizationLike = Union[int, Factorization]

# gcd(15, n) dispatch tables: certified decimal bounds for a hypothetical
# odd perfect n. T bounds are (lower, upper) on the prime reciprocal sum;
# H bounds are upper bounds on the abundancy limit.
T_GCD15_TABLE: dict[int, tuple[Fraction, Fraction]] = {
    1: (Fraction("0.667450"), Fraction("0.693148")),
    3: (Fraction("0.603831"), Fraction("0.657304")),
    5: (Fraction("0.647387"), Fraction("0.678036")),
    15: (Fraction("0.596063"), Fraction("0.673770")),
}
H_GCD15_TABLE: dict[int, Fraction] = {
    1: Fraction("2.014754"),
    3: Fraction("2.096234"),
    5: Fraction("2.031002"),
    15: Fraction("2.165439"),
}


@dataclass(frozen=True)
class BoundCheckRecord:
    """One bound applied to one subject, with applicability made explicit."""

    bound_id: str
    subject: tuple[tuple[str, object], ...]  # ordered key/value pairs
    applicable: bool
    hypothesis_failures: tuple[str, ...] = ()
    result: Optional[CheckResult] = None
    notes: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "Skipped"
        return self.result.verdict.value

    @property
    def failed(self) -> bool:
        return self.applicable and self.result.verdict is Verdict.FAILS

    @property
    def undecided(self) -> bool:
        return self.applicable and self.result.verdict is Verdict.UNDECIDED

    def to_json(self) -> dict:
        def rat(x: Optional[Fraction]):
            return None if x is None else str(x)

        out: dict = {"bound_id": self.bound_id}
        out.update(self.subject)
        out["verdict"] = self.verdict
        r = self.result
        out["lhs_lo"] = rat(r.lhs_lo) if r else None
        out["lhs_hi"] = rat(r.lhs_hi) if r else None
        out["rhs_lo"] = rat(r.rhs_lo) if r else None
        out["rhs_hi"] = rat(r.rhs_hi) if r else None
        out["precision_bits"] = r.precision_bits if r else 0
        out["hypothesis_failures"] = list(self.hypothesis_failures)
        out["notes"] = list(self.notes)
        return out


def _skipped(bound_id, subject, failures, notes=()) -> BoundCheckRecord:
    return BoundCheckRecord(
        bound_id,
        tuple(subject),
        applicable=False,
        hypothesis_failures=tuple(failures),
        notes=tuple(notes),
    )


def _checked(bound_id, subject, result, notes=()) -> BoundCheckRecord:
    return BoundCheckRecord(
        bound_id,
        tuple(subject),
        applicable=True,
        result=result,
        notes=tuple(notes),
    )


def _exact_result(lhs: Fraction, rhs: Fraction, relation: str) -> CheckResult:
    return compare_certified(const(lhs), const(rhs), relation)


def _fact_result(
    ok: bool,
    relation: str,
    lhs: Optional[Fraction] = None,
    rhs: Optional[Fraction] = None,
    note: str = "",
) -> CheckResult:
    """Exact structural fact (equality, congruence, shape) as a result."""
    return CheckResult(
        Verdict.HOLDS if ok else Verdict.FAILS,
        relation,
        lhs_lo=lhs,
        lhs_hi=lhs,
        rhs_lo=rhs,
        rhs_hi=rhs,
        note=note,
    )


def _as_factorization(n: FactorizationLike) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


# ---------------------------------------------------------------------------
# Per-number bound checks

def check_T_lower_simple(
    n: FactorizationLike, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """T(n) >= log 2 - 25/(64 p1) + S/2 - S^2/4 for primitive non-deficient n."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    if not divfun.is_primitive_nondeficient(f):
        return _skipped("T-lower-simple", subject, ["primitive-nondeficient"])
    p1 = f.smallest_prime
    s = divfun.surplus(f)
    t = divfun.prime_reciprocal_sum(f)
    rhs = LOG2 - const(Fraction(25, 64 * p1)) + const(s / 2 - s * s / 4)
    res = compare_certified(const(t), rhs, ">=", precision_cap)
    return _checked("T-lower-simple", subject, res)


def _refined_rhs(p1: int, s: Fraction):
    lp = e_log(const(p1))
    loglog = e_log(lp)
    correction = (const(Fraction(25, 32 * p1)) / lp) * (
        const(1) + const(2) * loglog / lp
    )
    return LOG2 - correction + const(s / 2 - s * s / 4)


def check_T_lower_refined(
    n: FactorizationLike, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """T(n) >= log 2 - (25/(32 p1 log p1))(1 + 2 log log p1 / log p1)
    + S/2 - S^2/4, for primitive non-deficient n with odd p1.

    p1 = 2 sits outside the supporting prime-square-tail lemma and
    log log 2 < 0 flips the correction's sign (n = 6 refutes the literal
    inequality), so it is reported Skipped with the comparison attached
    as a note.
    """
    f = _as_factorization(n)
    subject = (("n", f.value),)
    if not divfun.is_primitive_nondeficient(f):
        return _skipped("T-lower-refined", subject, ["primitive-nondeficient"])
    p1 = f.smallest_prime
    s = divfun.surplus(f)
    t = divfun.prime_reciprocal_sum(f)
    rhs = _refined_rhs(p1, s)
    res = compare_certified(const(t), rhs, ">=", precision_cap)
    if p1 == 2:
        return _skipped(
            "T-lower-refined",
            subject,
            ["p1-odd-required"],
            notes=(
                "log log 2 < 0 flips the correction term",
                f"literal comparison at p1=2: {res.verdict.value}",
            ),
        )
    return _checked("T-lower-refined", subject, res)


def _odd_exponent_positions(f: Factorization) -> list[int]:
    return [i for i, (_, a) in enumerate(f.pairs) if a % 2 == 1]


def check_T_upper_shape(
    n: FactorizationLike, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """T(n) < log 2 - 11/(50 p1^2) for primitive non-deficient n whose
    exponents are even except one odd a_t, with (p_t + 2)/2 >= p1 >= 11."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    failures = []
    if not divfun.is_primitive_nondeficient(f):
        failures.append("primitive-nondeficient")
    odd_pos = _odd_exponent_positions(f)
    if len(odd_pos) != 1:
        failures.append("one-odd-exponent")
    if f.pairs and f.smallest_prime < 11:
        failures.append("p1-at-least-11")
    if len(odd_pos) == 1 and f.pairs:
        p_t = f.pairs[odd_pos[0]][0]
        if Fraction(p_t + 2, 2) < f.smallest_prime:
            failures.append("odd-position-prime-large-enough")
    if failures:
        return _skipped("T-upper-shape", subject, failures)
    p1 = f.smallest_prime
    t = divfun.prime_reciprocal_sum(f)
    rhs = LOG2 - const(Fraction(11, 50 * p1 * p1))
    res = compare_certified(const(t), rhs, "<", precision_cap)
    return _checked("T-upper-shape", subject, res)


def check_H_prelude(n: FactorizationLike) -> BoundCheckRecord:
    """H(n) <= h(n) (1 + 3/(4 p1^2)) when all exponents are even except
    exactly one and p1 >= 3. Exact rational comparison."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    failures = []
    if len(_odd_exponent_positions(f)) != 1:
        failures.append("one-odd-exponent")
    if not f.pairs or f.smallest_prime < 3:
        failures.append("p1-at-least-3")
    if failures:
        return _skipped("H-prelude", subject, failures)
    p1 = f.smallest_prime
    lhs = divfun.abundancy_limit(f)
    rhs = divfun.abundancy(f) * (1 + Fraction(3, 4 * p1 * p1))
    return _checked("H-prelude", subject, _exact_result(lhs, rhs, "<="))


def check_H_over_h_ratio(n: FactorizationLike) -> BoundCheckRecord:
    """H/h <= (p_j^2/(p_j^2-1)) prod_{i != j} p_i^3/(p_i^3-1) with p_j the
    odd-exponent prime; same shape hypotheses as the prelude. Exact."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    failures = []
    odd_pos = _odd_exponent_positions(f)
    if len(odd_pos) != 1:
        failures.append("one-odd-exponent")
    if not f.pairs or f.smallest_prime < 3:
        failures.append("p1-at-least-3")
    if failures:
        return _skipped("H-over-h-ratio", subject, failures)
    j = odd_pos[0]
    lhs = divfun.abundancy_limit(f) / divfun.abundancy(f)
    rhs = Fraction(1)
    for i, (p, _) in enumerate(f.pairs):
        if i == j:
            rhs *= Fraction(p * p, p * p - 1)
        else:
            rhs *= Fraction(p**3, p**3 - 1)
    return _checked("H-over-h-ratio", subject, _exact_result(lhs, rhs, "<="))


def check_generalized_puchta(
    n: FactorizationLike, alpha: Fraction
) -> BoundCheckRecord:
    """Some prime power p_i^(a_i + 1) < max(2(k + 2 + p1)/alpha, k(k+1))
    for primitive non-deficient n with surplus S(n) >= alpha, 0 < alpha < 1."""
    f = _as_factorization(n)
    alpha = Fraction(alpha)
    subject = (("n", f.value),)
    failures = []
    if not (0 < alpha < 1):
        failures.append("alpha-in-open-unit-interval")
    if not divfun.is_primitive_nondeficient(f):
        failures.append("primitive-nondeficient")
    elif divfun.surplus(f) < alpha:
        failures.append("surplus-at-least-alpha")
    if failures:
        return _skipped("generalized-puchta", subject, failures)
    k = f.num_primes
    p1 = f.smallest_prime
    threshold = max(Fraction(2 * (k + 2 + p1), 1) / alpha, Fraction(k * (k + 1)))
    best = min(p ** (a + 1) for p, a in f.pairs)
    res = _exact_result(Fraction(best), threshold, "<")
    witness_p = next(p for p, a in f.pairs if p ** (a + 1) == best)
    res = CheckResult(
        res.verdict,
        res.relation,
        res.lhs_lo,
        res.lhs_hi,
        res.rhs_lo,
        res.rhs_hi,
        res.precision_bits,
        witness={"prime": witness_p},
        note=res.note,
    )
    return _checked("generalized-puchta", subject, res)


def check_servais(n: FactorizationLike) -> BoundCheckRecord:
    """p1 <= number of distinct primes, for non-deficient n."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    if not divfun.is_nondeficient(f):
        return _skipped("servais", subject, ["nondeficient"])
    res = _exact_result(
        Fraction(f.smallest_prime), Fraction(f.num_primes), "<="
    )
    return _checked("servais", subject, res)


def check_derivative_log(
    n: FactorizationLike, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """arithmetic_derivative(n) <= n log n / (p1 log p1) for n >= 2.

    Prime powers are decided exactly (log_p of p^a is a), which settles
    the equality edge at n prime."""
    f = _as_factorization(n)
    subject = (("n", f.value),)
    if not f.pairs:
        return _skipped("derivative-log", subject, ["n-at-least-2"])
    d = divfun.arithmetic_derivative(f)
    v = f.value
    p1 = f.smallest_prime
    if f.num_primes == 1:
        a = f.pairs[0][1]
        rhs_exact = Fraction(v * a, p1)
        return _checked(
            "derivative-log",
            subject,
            _exact_result(Fraction(d), rhs_exact, "<="),
            notes=("prime power: log ratio is exact",),
        )
    rhs = const(v) * e_log(const(v)) / (const(p1) * e_log(const(p1)))
    res = compare_certified(const(Fraction(d)), rhs, "<=", precision_cap)
    return _checked("derivative-log", subject, res)


_LARGEST_PRIME_IDS = (
    "largest-prime-cube",
    "largest-prime-square",
    "second-largest-fifth-power",
    "top-two-product",
)

_EMPIRICAL_NOTE = "empirical: theorem stated for odd perfect numbers"


def check_largest_prime_bounds(n: FactorizationLike) -> list[BoundCheckRecord]:
    """Exact integer bounds on the largest prime factors of a primitive
    non-deficient n:

    - largest-prime-square: p_k^2 < 2n, a theorem here, must Hold
    - largest-prime-cube: p_k^3 < 3n
    - second-largest-fifth-power: p_{k-1}^5 < 2n
    - top-two-product: (p_k p_{k-1})^4 < 6 n^2

    The last three are theorems only for odd perfect numbers; on odd
    inputs they report the observed status as empirical records (the
    cube famously fails at 9765 = 3^2*5*7*31) and even inputs skip them.
    """
    f = _as_factorization(n)
    subject = (("n", f.value),)
    if not divfun.is_primitive_nondeficient(f):
        return [
            _skipped(bid, subject, ["primitive-nondeficient"])
            for bid in _LARGEST_PRIME_IDS
        ]
    v = f.value
    pk = f.largest_prime
    odd_input = v % 2 == 1
    out = []
    if odd_input:
        out.append(
            _checked(
                "largest-prime-cube",
                subject,
                _exact_result(Fraction(pk**3), Fraction(3 * v), "<"),
                notes=(_EMPIRICAL_NOTE,),
            )
        )
    else:
        out.append(_skipped("largest-prime-cube", subject, ["odd-input"]))
    out.append(
        _checked(
            "largest-prime-square",
            subject,
            _exact_result(Fraction(pk**2), Fraction(2 * v), "<"),
        )
    )
    if f.num_primes < 2:
        out.append(
            _skipped("second-largest-fifth-power", subject, ["two-primes-required"])
        )
        out.append(_skipped("top-two-product", subject, ["two-primes-required"]))
    elif not odd_input:
        out.append(_skipped("second-largest-fifth-power", subject, ["odd-input"]))
        out.append(_skipped("top-two-product", subject, ["odd-input"]))
    else:
        pk1 = f.pairs[-2][0]
        out.append(
            _checked(
                "second-largest-fifth-power",
                subject,
                _exact_result(Fraction(pk1**5), Fraction(2 * v), "<"),
                notes=(_EMPIRICAL_NOTE,),
            )
        )
        out.append(
            _checked(
                "top-two-product",
                subject,
                _exact_result(
                    Fraction((pk * pk1) ** 4), Fraction(6 * v * v), "<"
                ),
                notes=(_EMPIRICAL_NOTE,),
            )
        )
    return out


# ---------------------------------------------------------------------------
# OPN candidate report

@dataclass(frozen=True)
class CandidateReport:
    candidate: SpoofFactorization
    value: int
    records: tuple[BoundCheckRecord, ...]
    special: Optional[tuple[int, int]]
    refuting: tuple[str, ...]

    @property
    def verdict(self) -> str:
        if self.refuting:
            return "Refuted"
        if any(r.undecided for r in self.records):
            return "Undecided"
        return "Consistent"

    def record(self, bound_id: str) -> BoundCheckRecord:
        for r in self.records:
            if r.bound_id == bound_id:
                return r
        raise KeyError(bound_id)


def _euler_special(
    sf: SpoofFactorization, designated: Optional[tuple[int, int]] = None
) -> tuple[Optional[tuple[int, int]], str]:
    """The unique (x, b) with x = b = 1 (mod 4) and all other b even,
    or None with a reason. A designated pair is validated instead of
    auto-detected."""
    if designated is not None:
        designated = (int(designated[0]), int(designated[1]))
        hits = sf.pairs.count(designated)
        if hits == 0:
            return None, f"designated pair {designated} not in the factorization"
        if hits > 1:
            return None, f"designated pair {designated} appears {hits} times"
        x, b = designated
        if x % 4 != 1 or b % 4 != 1:
            return (
                None,
                f"designated pair {designated} needs base and exponent 1 mod 4",
            )
        if any(pair != designated and pair[1] % 2 == 1 for pair in sf.pairs):
            return None, "a non-designated exponent is odd"
        return designated, "designated"
    odd_exp = [(x, b) for x, b in sf.pairs if b % 2 == 1]
    if len(odd_exp) != 1:
        return None, f"{len(odd_exp)} odd exponents, need exactly 1"
    x, b = odd_exp[0]
    if x % 4 != 1:
        return None, f"special base {x} is {x % 4} mod 4, need 1"
    if b % 4 != 1:
        return None, f"special exponent {b} is {b % 4} mod 4, need 1"
    return (x, b), ""


def opn_candidate_report(
    sf: SpoofFactorization,
    *,
    special: Optional[tuple[int, int]] = None,
    check_primality: bool = False,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> CandidateReport:
    """Run every structural OPN constraint a candidate (possibly a spoof)
    can violate, with formal bases standing in for primes.

    Repeated bases count as distinct formal primes in T and H. The
    special pair is auto-detected unless designated. Base primality is
    checked only on request (spoofs legitimately carry composite
    bases)."""
    value = sf.value
    subject = (("candidate", str(sf)),)
    designated = special
    records: list[BoundCheckRecord] = []

    shape_ok = bool(sf.pairs) and all(x >= 3 and x % 2 == 1 for x, _ in sf.pairs)
    records.append(
        _checked(
            "shape-odd-positive",
            subject,
            _fact_result(
                shape_ok,
                "shape",
                note=""
                if shape_ok
                else "bases must be odd and at least 3 for an odd perfect shape",
            ),
        )
    )

    st = sigma_tilde(sf)
    records.append(
        _checked(
            "spoof-perfect",
            subject,
            _fact_result(
                st == 2 * value, "==", Fraction(st), Fraction(2 * value)
            ),
        )
    )

    special, reason = _euler_special(sf, designated)
    records.append(
        _checked(
            "euler-form",
            subject,
            _fact_result(
                special is not None,
                "shape",
                note=reason
                if special is None
                else f"special pair {special[0]}^{special[1]}"
                + (" (designated)" if designated else ""),
            ),
        )
    )

    abs_value = abs(value)
    records.append(
        _checked(
            "excludes-105",
            subject,
            _fact_result(
                abs_value % 105 != 0, "!=", Fraction(abs_value % 105), Fraction(0)
            ),
        )
    )
    records.append(
        _checked(
            "excludes-3-5-11-13",
            subject,
            _fact_result(
                abs_value % 2145 != 0, "!=", Fraction(abs_value % 2145), Fraction(0)
            ),
        )
    )

    if special is None:
        records.append(
            _skipped("special-not-minus-one-mod-165", subject, ["euler-form"])
        )
    else:
        records.append(
            _checked(
                "special-not-minus-one-mod-165",
                subject,
                _fact_result(
                    special[0] % 165 != 164,
                    "!=",
                    Fraction(special[0] % 165),
                    Fraction(164),
                ),
            )
        )

    if abs_value % 165 == 0:
        exp5 = sum(b for x, b in sf.pairs if x == 5)
        records.append(
            _checked(
                "five-exact-exponent-with-165",
                subject,
                _exact_result(Fraction(exp5), Fraction(1), "<="),
                notes=("165 | n forces the exponent of 5 to be exactly 1",),
            )
        )
    else:
        records.append(
            _skipped(
                "five-exact-exponent-with-165", subject, ["165-divides-required"]
            )
        )

    unit_failure = ["no-unit-bases"] if sf.has_unit_base else []
    if unit_failure or not shape_ok:
        hyp = unit_failure + ([] if shape_ok else ["odd-positive-shape"])
        for bid in (
            "T-table-lower",
            "T-table-upper",
            "H-table",
            "H-upper-quadratic",
            "T-upper-smallest-prime",
            "surplus-upper-smallest-prime",
        ):
            records.append(_skipped(bid, subject, hyp))
    else:
        g = gcd(15, abs_value)
        t = formal_prime_reciprocal_sum(sf)
        h_limit = formal_abundancy_limit(sf)
        t_lo, t_hi = T_GCD15_TABLE[g]
        records.append(
            _checked(
                "T-table-lower",
                subject,
                _exact_result(t, t_lo, ">"),
                notes=(f"gcd(15, n) = {g}",),
            )
        )
        records.append(
            _checked(
                "T-table-upper",
                subject,
                _exact_result(t, t_hi, "<"),
                notes=(f"gcd(15, n) = {g}",),
            )
        )
        records.append(
            _checked(
                "H-table",
                subject,
                _exact_result(h_limit, H_GCD15_TABLE[g], "<="),
                notes=(f"gcd(15, n) = {g}",),
            )
        )
        p1 = sf.pairs[0][0]
        records.append(
            _checked(
                "H-upper-quadratic",
                subject,
                _exact_result(h_limit, 2 + Fraction(9, 4 * p1 * p1), "<="),
            )
        )
        if p1 < 11:
            records.append(
                _skipped("T-upper-smallest-prime", subject, ["p1-at-least-11"])
            )
            records.append(
                _skipped(
                    "surplus-upper-smallest-prime", subject, ["p1-at-least-11"]
                )
            )
        else:
            rhs_t = LOG2 - const(Fraction(11, 50 * p1 * p1))
            records.append(
                _checked(
                    "T-upper-smallest-prime",
                    subject,
                    compare_certified(const(t), rhs_t, "<", precision_cap),
                )
            )
            rhs_s = const(Fraction(25, 8 * p1)) / e_log(const(p1))
            records.append(
                _checked(
                    "surplus-upper-smallest-prime",
                    subject,
                    compare_certified(
                        const(h_limit - 2), rhs_s, "<", precision_cap
                    ),
                )
            )

    if not shape_ok:
        for bid in (
            "largest-prime-cube",
            "largest-prime-square",
            "second-largest-fifth-power",
            "top-two-product",
        ):
            records.append(_skipped(bid, subject, ["odd-positive-shape"]))
    else:
        pk = sf.pairs[-1][0]
        records.append(
            _checked(
                "largest-prime-cube",
                subject,
                _exact_result(Fraction(pk**3), Fraction(3 * value), "<"),
            )
        )
        records.append(
            _checked(
                "largest-prime-square",
                subject,
                _exact_result(Fraction(pk**2), Fraction(2 * value), "<"),
            )
        )
        if len(sf.pairs) >= 2:
            pk1 = sf.pairs[-2][0]
            records.append(
                _checked(
                    "second-largest-fifth-power",
                    subject,
                    _exact_result(Fraction(pk1**5), Fraction(2 * value), "<"),
                )
            )
            records.append(
                _checked(
                    "top-two-product",
                    subject,
                    _exact_result(
                        Fraction((pk * pk1) ** 4), Fraction(6 * value * value), "<"
                    ),
                )
            )
        else:
            records.append(
                _skipped(
                    "second-largest-fifth-power", subject, ["two-primes-required"]
                )
            )
            records.append(
                _skipped("top-two-product", subject, ["two-primes-required"])
            )

    if special is None:
        records.append(_skipped("special-power-fifth", subject, ["euler-form"]))
        records.append(
            _skipped("special-power-fifth-refined", subject, ["euler-form"])
        )
    elif special[1] == 1:
        skip_reason = ["special-exponent-above-1"]
        records.append(_skipped("special-power-fifth", subject, skip_reason))
        records.append(
            _skipped("special-power-fifth-refined", subject, skip_reason)
        )
    else:
        q, e = special
        m_sq = value // q**e
        records.append(
            _checked(
                "special-power-fifth",
                subject,
                _exact_result(Fraction(q**5), Fraction(2 * m_sq), "<"),
            )
        )
        records.append(
            _checked(
                "special-power-fifth-refined",
                subject,
                _exact_result(
                    Fraction(q**5 * 2145**2), Fraction(2 * m_sq), "<"
                ),
            )
        )

    if check_primality:
        bad = [x for x, _ in sf.pairs if x < 2 or not _is_prime_cached(x)]
        records.append(
            _checked(
                "bases-all-prime",
                subject,
                _exact_result(Fraction(len(bad)), Fraction(0), "<="),
                notes=(f"composite or invalid bases: {bad}",) if bad else (),
            )
        )

    refuting = tuple(r.bound_id for r in records if r.failed)
    return CandidateReport(
        candidate=sf,
        value=value,
        records=tuple(records),
        special=special,
        refuting=refuting,
    )


def _is_prime_cached(x: int) -> bool:
    from .numkernel import is_prime

    return is_prime(x)


# ---------------------------------------------------------------------------
# Surplus constant estimate

@dataclass(frozen=True)
class SurplusConstantEstimate:
    limit: int
    odd_only: bool
    value: Optional[Fraction]
    attained_at: Optional[int]


def estimate_surplus_constant(
    limit: int, *, odd_only: bool = False, jobs: int = 1
) -> SurplusConstantEstimate:
    """max (H(n) - 2) p1 over primitive non-deficient n <= limit."""
    from .sieve import enumerate_primitive_nondeficient

    best: Optional[Fraction] = None
    best_n: Optional[int] = None
    for f in enumerate_primitive_nondeficient(limit, odd_only=odd_only, jobs=jobs):
        cand = (divfun.abundancy_limit(f) - 2) * f.smallest_prime
        if best is None or cand > best:
            best = cand
            best_n = f.value
    return SurplusConstantEstimate(limit, odd_only, best, best_n)


# ---------------------------------------------------------------------------
# Tricky special scan

@dataclass(frozen=True)
class TrickySpecialsReport:
    q_limit: int
    mod4_restricted: bool
    scanned: int
    witnesses: tuple[int, ...]
    lemma_checks: int
    lemma_violations: tuple[int, ...]

    @property
    def clean(self) -> bool:
        return not self.witnesses and not self.lemma_violations


def check_special_predecessor(
    odd_primes: Sequence[int], q: int
) -> BoundCheckRecord:
    """q <= 2 prod(p_i - 1) - 1 for distinct odd primes with
    prod p/(p-1) <= 2 and an odd prime q pushing the product above 2."""
    primes = tuple(sorted(odd_primes))
    subject = (("primes", list(primes)), ("q", q))
    failures = []
    from .numkernel import is_prime

    if len(set(primes)) != len(primes) or any(
        p % 2 == 0 or not is_prime(p) for p in primes
    ):
        failures.append("distinct-odd-primes")
    if q % 2 == 0 or not is_prime(q) or q in primes:
        failures.append("q-new-odd-prime")
    num = den = 1
    for p in primes:
        num *= p
        den *= p - 1
    if not failures:
        if num > 2 * den:
            failures.append("H-at-most-2")
        elif q * num <= 2 * (q - 1) * den:
            failures.append("product-exceeds-2")
    if failures:
        return _skipped("special-predecessor", subject, failures)
    bound = 2 * den - 1  # den is prod(p_i - 1)
    res = _exact_result(Fraction(q), Fraction(bound), "<=")
    return _checked("special-predecessor", subject, res)


def no_tricky_specials_scan(
    q_limit: int, *, mod4_restrict: bool = False
) -> TrickySpecialsReport:
    """Scan odd primes q <= q_limit for H(odd(q+1)) < 2 < H(q odd(q+1)).

    No such q should exist; any q that would trigger also has the
    predecessor lemma's bound verified. q = 2 is excluded (the lemma and
    the special-prime role both require q odd)."""
    if q_limit < 3:
        return TrickySpecialsReport(q_limit, mod4_restrict, 0, (), 0, ())
    spf = smallest_prime_factor_table((q_limit + 1) // 2 + 1)
    witnesses = []
    lemma_checks = 0
    lemma_violations = []
    scanned = 0
    for block in prime_blocks(3, q_limit):
        for q in block:
            if mod4_restrict and q % 4 != 1:
                continue
            scanned += 1
            m = q + 1
            m >>= (m & -m).bit_length() - 1
            num = den = 1
            prod_pm1 = 1
            mm = m
            while mm > 1:
                p = spf[mm]
                num *= p
                den *= p - 1
                prod_pm1 *= p - 1
                while mm % p == 0:
                    mm //= p
            below = num < 2 * den
            above = q * num > 2 * (q - 1) * den
            if below and above:
                witnesses.append(q)
            if num <= 2 * den and above:
                lemma_checks += 1
                if q > 2 * prod_pm1 - 1:
                    lemma_violations.append(q)
    return TrickySpecialsReport(
        q_limit,
        mod4_restrict,
        scanned,
        tuple(witnesses),
        lemma_checks,
        tuple(lemma_violations),
    )


# ---------------------------------------------------------------------------
# Analytic support lemma sweeps (certified)

def verify_pi_lower(
    limit: int, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """pi(p) >= p / log p + 1 for every prime 19 <= p <= limit."""
    from .realcert import _ctx

    subject = (("limit", limit),)
    if limit < 19:
        return _skipped("pi-lower", subject, ["limit-at-least-19"])
    down = _ctx(64, False)
    import gmpy2

    count = 0
    checked = 0
    for block in prime_blocks(2, limit):
        for p in block:
            count += 1
            if p < 19:
                continue
            checked += 1
            # certified fast path: (pi(p) - 1) * log_down(p) >= p
            lhs = down.mul(gmpy2.mpfr(count - 1), down.log(gmpy2.mpfr(p)))
            if lhs >= p:
                continue
            res = compare_certified(
                const(count),
                const(p) / e_log(const(p)) + const(1),
                ">=",
                precision_cap,
            )
            if res.verdict is not Verdict.HOLDS:
                return _checked(
                    "pi-lower",
                    subject,
                    CheckResult(
                        res.verdict,
                        res.relation,
                        res.lhs_lo,
                        res.lhs_hi,
                        res.rhs_lo,
                        res.rhs_hi,
                        res.precision_bits,
                        witness={"p": p, "pi": count},
                    ),
                )
    return _checked(
        "pi-lower",
        subject,
        CheckResult(
            Verdict.HOLDS,
            ">=",
            precision_bits=64,
            witness={"primes_checked": checked},
        ),
    )


def verify_nth_prime_lower(
    limit: int, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """P_j >= j log j for 1 <= j <= limit (P_j the j-th prime)."""
    from .realcert import _ctx
    import gmpy2

    subject = (("limit", limit),)
    if limit < 1:
        return _skipped("nth-prime-lower", subject, ["limit-at-least-1"])
    # sieve comfortably past the limit-th prime
    if limit < 6:
        hi = 15
    else:
        lj = _float_log(limit)
        hi = int(limit * (lj + _float_log(lj)) * 1.2) + 100
    up = _ctx(64, True)
    j = 0
    lo, cur_hi = 2, hi
    while j < limit:
        for block in prime_blocks(lo, cur_hi):
            for p in block:
                j += 1
                if j > limit:
                    break
                if j == 1:
                    continue  # 1 * log 1 = 0 < 2
                # certified fast path: j * log_up(j) <= P_j
                lhs = up.mul(gmpy2.mpfr(j), up.log(gmpy2.mpfr(j)))
                if lhs <= p:
                    continue
                res = compare_certified(
                    const(p), const(j) * e_log(const(j)), ">=", precision_cap
                )
                if res.verdict is not Verdict.HOLDS:
                    return _checked(
                        "nth-prime-lower",
                        subject,
                        CheckResult(
                            res.verdict,
                            res.relation,
                            res.lhs_lo,
                            res.lhs_hi,
                            res.rhs_lo,
                            res.rhs_hi,
                            res.precision_bits,
                            witness={"j": j, "prime": p},
                        ),
                    )
            if j > limit:
                break
        lo, cur_hi = cur_hi + 1, cur_hi * 2
    return _checked(
        "nth-prime-lower",
        subject,
        CheckResult(
            Verdict.HOLDS, ">=", precision_bits=64, witness={"checked": limit}
        ),
    )


def verify_log_refinement(
    limit: int, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> BoundCheckRecord:
    """log(1 + 1/(x-1)) <= 1/x + 25/(32 x^2) for integers 2 <= x <= limit."""
    from .realcert import _ctx
    import gmpy2

    subject = (("limit", limit),)
    if limit < 2:
        return _skipped("log-refinement", subject, ["limit-at-least-2"])
    down = _ctx(64, False)
    up = _ctx(64, True)
    one = gmpy2.mpfr(1)
    for x in range(2, limit + 1):
        # certified fast path at 64 bits
        lhs = up.log(up.div(gmpy2.mpfr(x), gmpy2.mpfr(x - 1)))
        rhs = down.add(
            down.div(one, gmpy2.mpfr(x)),
            down.div(gmpy2.mpfr(25), gmpy2.mpfr(32 * x * x)),
        )
        if lhs <= rhs:
            continue
        res = compare_certified(
            e_log(const(Fraction(x, x - 1))),
            const(Fraction(1, x) + Fraction(25, 32 * x * x)),
            "<=",
            precision_cap,
        )
        if res.verdict is not Verdict.HOLDS:
            return _checked(
                "log-refinement",
                subject,
                CheckResult(
                    res.verdict,
                    res.relation,
                    res.lhs_lo,
                    res.lhs_hi,
                    res.rhs_lo,
                    res.rhs_hi,
                    res.precision_bits,
                    witness={"x": x},
                ),
            )
    return _checked(
        "log-refinement",
        subject,
        CheckResult(
            Verdict.HOLDS, "<=", precision_bits=64, witness={"checked": limit - 1}
        ),
    )


# Taylor cushion: 1 + x + x^2 >= exp(x + (2/5) x^2) on [0, 1/11]

TAYLOR_RIGHT_END = Fraction(1, 11)
TAYLOR_LEFT_CELL = Fraction(1, 1 << 20)


def _taylor_series_margin(x: Fraction) -> Fraction:
    """Exact rational upper bound for the scaled remainder
    (2/5)x + (2/25)x^2 + sum_{j>=3} y^j/(j! x^2), y = x + (2/5)x^2.

    Strictly below 1/10 certifies exp(y) < 1 + x + x^2 at that x, and
    every term increases in x, so one evaluation covers (0, x]."""
    y = x + Fraction(2, 5) * x * x
    if y >= 5:
        raise ValueError("series bound needs y < 5")
    u = 1 + Fraction(2, 5) * x  # y = x u
    j3 = x * u**3 / 6
    tail = (x * x * u**4 / 24) * Fraction(5, 1) / (5 - y)
    return Fraction(2, 5) * x + Fraction(2, 25) * x * x + j3 + tail


def taylor_point_check(
    x: Fraction, *, precision_cap: int = PRECISION_CAP_DEFAULT
) -> CheckResult:
    """Certified 1 + x + x^2 >= exp(x + (2/5) x^2) at one rational x in
    [0, 1/11]. x = 0 is exact equality."""
    x = Fraction(x)
    if not 0 <= x <= TAYLOR_RIGHT_END:
        raise ValueError(f"x = {x} outside [0, 1/11]")
    if x == 0:
        return CheckResult(
            Verdict.HOLDS,
            ">=",
            lhs_lo=Fraction(1),
            lhs_hi=Fraction(1),
            rhs_lo=Fraction(1),
            rhs_hi=Fraction(1),
            note="both sides exactly 1 at x = 0",
        )
    lhs = const(1 + x + x * x)
    rhs = e_exp(const(x + Fraction(2, 5) * x * x))
    return compare_certified(lhs, rhs, ">=", precision_cap)


def _taylor_cell_proved(a: Fraction, b: Fraction, prec: int) -> bool:
    """Certify log(1 + x + x^2) - x - (2/5)x^2 > 0 on [a, b], 0 < a < b."""
    X = Interval.from_endpoints(a, b, prec)
    one = Interval.from_rational(1, prec)
    poly = iv_add(iv_add(one, X, prec), iv_mul(X, X, prec), prec)
    f_iv = iv_sub(
        iv_log(poly, prec),
        iv_add(
            X,
            iv_mul(Interval.from_rational(Fraction(2, 5), prec), iv_mul(X, X, prec), prec),
            prec,
        ),
        prec,
    )
    if f_iv.lo > 0:
        return True
    # monotone fallback: f(a) > 0 and f' >= 0 on the cell
    fa = compare_certified(
        e_log(const(1 + a + a * a)),
        const(a + Fraction(2, 5) * a * a),
        ">",
        precision_cap=4096,
    )
    if fa.verdict is not Verdict.HOLDS:
        return False
    two_x_plus_1 = iv_add(one, iv_mul(Interval.from_rational(2, prec), X, prec), prec)
    deriv = iv_sub(
        iv_div(two_x_plus_1, poly, prec),
        iv_add(
            one,
            iv_mul(Interval.from_rational(Fraction(4, 5), prec), X, prec),
            prec,
        ),
        prec,
    )
    return deriv.lo >= 0


def verify_taylor_lower(
    mode: str,
    *,
    grid_points: int = 10_000,
    depth_budget: int = 60,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> BoundCheckRecord:
    """1 + x + x^2 >= exp(x + (2/5) x^2) on [0, 1/11].

    sample: certified pointwise check on a uniform rational grid.
    certify: series bound on (0, 2^-20] (monotone rational majorant
    evaluated at the right endpoint) plus adaptive interval bisection of
    [2^-20, 1/11] proving strict positivity of
    log(1 + x + x^2) - x - (2/5)x^2 on every leaf.
    """
    subject = (("mode", mode),)
    if mode == "sample":
        if grid_points < 1:
            return _skipped("taylor-lower:sample", subject, ["grid-points-positive"])
        last: Optional[CheckResult] = None
        for k in range(1, grid_points + 1):
            x = Fraction(k, 11 * grid_points)
            res = taylor_point_check(x, precision_cap=precision_cap)
            if res.verdict is not Verdict.HOLDS:
                return _checked(
                    "taylor-lower:sample",
                    subject,
                    CheckResult(
                        res.verdict,
                        res.relation,
                        res.lhs_lo,
                        res.lhs_hi,
                        res.rhs_lo,
                        res.rhs_hi,
                        res.precision_bits,
                        witness={"x": str(x)},
                    ),
                )
            last = res
        return _checked(
            "taylor-lower:sample",
            subject,
            CheckResult(
                Verdict.HOLDS,
                ">=",
                last.lhs_lo,
                last.lhs_hi,
                last.rhs_lo,
                last.rhs_hi,
                last.precision_bits,
                witness={"grid_points": grid_points},
                note="x = 0 is exact equality, grid covers (0, 1/11]",
            ),
        )
    if mode != "certify":
        raise ValueError(f"mode must be 'sample' or 'certify', got {mode!r}")

    margin = _taylor_series_margin(TAYLOR_LEFT_CELL)
    if margin >= Fraction(1, 10):
        return _checked(
            "taylor-lower:certify",
            subject,
            CheckResult(
                Verdict.FAILS,
                ">",
                lhs_lo=margin,
                lhs_hi=margin,
                rhs_lo=Fraction(1, 10),
                rhs_hi=Fraction(1, 10),
                witness={"cell": f"(0, {TAYLOR_LEFT_CELL}]"},
                note="series margin not below 1/10 on the left cell",
            ),
        )
    leaves = 0
    max_depth = 0
    stack = [(TAYLOR_LEFT_CELL, TAYLOR_RIGHT_END, 0)]
    while stack:
        a, b, depth = stack.pop()
        max_depth = max(max_depth, depth)
        if _taylor_cell_proved(a, b, 192):
            leaves += 1
            continue
        if depth >= depth_budget:
            return _checked(
                "taylor-lower:certify",
                subject,
                CheckResult(
                    Verdict.UNDECIDED,
                    ">",
                    precision_bits=192,
                    witness={"cell": [str(a), str(b)], "depth": depth},
                    note="depth budget exhausted on this subinterval",
                ),
            )
        mid = (a + b) / 2
        stack.append((mid, b, depth + 1))
        stack.append((a, mid, depth + 1))
    return _checked(
        "taylor-lower:certify",
        subject,
        CheckResult(
            Verdict.HOLDS,
            ">",
            precision_bits=192,
            witness={
                "leaves": leaves,
                "max_depth": max_depth,
                "left_cell_margin": str(margin),
            },
            note="left cell by monotone series bound, rest by bisection",
        ),
    )


_SQUARE_SCALE_BITS = 128


def _prime_square_suffixes(
    q_limit: int, cutoff: int, shifted: bool
) -> tuple[dict[int, int], int]:
    """For each odd prime q <= q_limit, an exact integer U(q) with
    sum over primes p in [q, cutoff] of 1/(p^2 - shifted) <= U(q) / 2^128.
    """
    scale = 1 << _SQUARE_SCALE_BITS
    qs = [p for p in _primes_for_trial(q_limit) if 3 <= p <= q_limit]
    prefix_at: dict[int, int] = {}
    total = 0
    qi = 0
    shift = 1 if shifted else 0
    for block in prime_blocks(3, cutoff):
        for p in block:
            while qi < len(qs) and qs[qi] <= p:
                prefix_at[qs[qi]] = total  # sum over primes < q
                qi += 1
            total += -(-scale // (p * p - shift))
    while qi < len(qs):
        prefix_at[qs[qi]] = total
        qi += 1
    return {q: total - pre for q, pre in prefix_at.items()}, total


def _square_tail_rhs(q: int):
    lq = e_log(const(q))
    return (const(1) / (const(q) * lq)) * (const(1) + const(2) * e_log(lq) / lq)


def verify_prime_square_tail(
    q_limit: int,
    *,
    cutoff: int = 100_000_000,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> BoundCheckRecord:
    """sum_{p prime >= q} 1/p^2 < (1/(q log q))(1 + 2 log log q / log q)
    for every odd prime q <= q_limit, via an exact dyadic partial sum
    over [q, cutoff] plus the tail majorant 1/cutoff."""
    subject = (("q_limit", q_limit), ("cutoff", cutoff))
    if q_limit < 3:
        return _skipped("prime-square-tail", subject, ["q-limit-at-least-3"])
    if cutoff < q_limit:
        return _skipped("prime-square-tail", subject, ["cutoff-at-least-q-limit"])
    suffixes, _ = _prime_square_suffixes(q_limit, cutoff, shifted=False)
    tail = Fraction(1, cutoff)
    scale = 1 << _SQUARE_SCALE_BITS
    for q in sorted(suffixes):
        lhs = Fraction(suffixes[q], scale) + tail
        res = compare_certified(const(lhs), _square_tail_rhs(q), "<", precision_cap)
        if res.verdict is not Verdict.HOLDS:
            return _checked(
                "prime-square-tail",
                subject,
                CheckResult(
                    res.verdict,
                    res.relation,
                    res.lhs_lo,
                    res.lhs_hi,
                    res.rhs_lo,
                    res.rhs_hi,
                    res.precision_bits,
                    witness={"q": q},
                ),
            )
    return _checked(
        "prime-square-tail",
        subject,
        CheckResult(
            Verdict.HOLDS,
            "<",
            precision_bits=64,
            witness={"q_count": len(suffixes)},
        ),
    )


def verify_prime_square_product(
    q_limit: int,
    *,
    cutoff: int = 100_000_000,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> BoundCheckRecord:
    """log prod_{p >= q} (1 + 1/(p^2 - 1)) < the tail bound + 4/q^3 for
    every odd prime q <= q_limit. The partial log-sum is bounded termwise
    by 1/(p^2 - 1); the tail beyond the cutoff by 2/cutoff."""
    subject = (("q_limit", q_limit), ("cutoff", cutoff))
    if q_limit < 3:
        return _skipped("prime-square-product", subject, ["q-limit-at-least-3"])
    if cutoff < q_limit:
        return _skipped(
            "prime-square-product", subject, ["cutoff-at-least-q-limit"]
        )
    suffixes, _ = _prime_square_suffixes(q_limit, cutoff, shifted=True)
    tail = Fraction(2, cutoff)
    scale = 1 << _SQUARE_SCALE_BITS
    for q in sorted(suffixes):
        lhs = Fraction(suffixes[q], scale) + tail
        rhs = _square_tail_rhs(q) + const(Fraction(4, q**3))
        res = compare_certified(const(lhs), rhs, "<", precision_cap)
        if res.verdict is not Verdict.HOLDS:
            return _checked(
                "prime-square-product",
                subject,
                CheckResult(
                    res.verdict,
                    res.relation,
                    res.lhs_lo,
                    res.lhs_hi,
                    res.rhs_lo,
                    res.rhs_hi,
                    res.precision_bits,
                    witness={"q": q},
                ),
            )
    return _checked(
        "prime-square-product",
        subject,
        CheckResult(
            Verdict.HOLDS,
            "<",
            precision_bits=64,
            witness={"q_count": len(suffixes)},
        ),
    )


# ---------------------------------------------------------------------------
# Sweep drivers (deterministic under any worker count)

_PND_SWEEP_CHECKS = (
    "T-lower-simple",
    "T-lower-refined",
    "generalized-puchta",
    "servais",
    "derivative-log",
    "largest-prime-square",
)


def _pnd_records(f: Factorization, precision_cap: int) -> list[BoundCheckRecord]:
    out = [
        check_T_lower_simple(f, precision_cap=precision_cap),
        check_T_lower_refined(f, precision_cap=precision_cap),
        check_generalized_puchta(f, divfun.surplus(f)),
        check_servais(f),
        check_derivative_log(f, precision_cap=precision_cap),
    ]
    out.append(check_largest_prime_bounds(f)[1])  # the square theorem
    return out


def _pnd_sweep_task(args) -> list[BoundCheckRecord]:
    lo, hi, odd_only, precision_cap = args
    from .sieve import _pnd_in_segment

    out = []
    for pairs in _pnd_in_segment((lo, hi, odd_only)):
        f = Factorization._trusted(pairs)
        out.extend(_pnd_records(f, precision_cap))
    return out


def run_pnd_bound_suite(
    limit: int,
    *,
    odd_only: bool = False,
    precision_cap: int = PRECISION_CAP_DEFAULT,
    jobs: int = 1,
    segment_size: int = 1 << 18,
) -> Iterator[BoundCheckRecord]:
    """Theorem-grade bound checks over every primitive non-deficient
    n <= limit, in increasing n, fixed check order per n."""
    tasks = [
        (lo, min(lo + segment_size, limit + 1), odd_only, precision_cap)
        for lo in range(1, limit + 1, segment_size)
    ]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield from _pnd_sweep_task(task)
        return
    with Pool(processes=min(jobs, os.cpu_count() or 1)) as pool:
        for block in pool.imap(_pnd_sweep_task, tasks):
            yield from block


def _shape_sweep_task(args) -> list[BoundCheckRecord]:
    lo, hi = args
    spf = _SHAPE_SPF_CACHE.get("spf")
    if spf is None or len(spf) < hi:
        spf = smallest_prime_factor_table(hi - 1)
        _SHAPE_SPF_CACHE["spf"] = spf
    out = []
    for n in range(lo | 1, hi, 2):
        if n < 3:
            continue
        pairs = factor_with_spf(n, spf)
        if sum(a & 1 for _, a in pairs) != 1:
            continue
        f = Factorization._trusted(tuple(pairs))
        out.append(check_H_prelude(f))
        out.append(check_H_over_h_ratio(f))
    return out


_SHAPE_SPF_CACHE: dict = {}


def run_shape_suite(
    limit: int,
    *,
    jobs: int = 1,
    segment_size: int = 1 << 17,
) -> Iterator[BoundCheckRecord]:
    """H-prelude and H-over-h ratio checks over every shape-applicable
    odd n <= limit (exactly one odd exponent, p1 >= 3)."""
    tasks = [
        (lo, min(lo + segment_size, limit + 1))
        for lo in range(1, limit + 1, segment_size)
    ]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield from _shape_sweep_task(task)
        return
    with Pool(processes=min(jobs, os.cpu_count() or 1)) as pool:
        for block in pool.imap(_shape_sweep_task, tasks):
            yield from block


def run_lemma_suite(
    *,
    sweep_limit: int = 1_000_000,
    q_limit: int = 10_000,
    cutoff: int = 100_000_000,
    grid_points: int = 10_000,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> list[BoundCheckRecord]:
    """All analytic support lemmas at their default verification ranges."""
    return [
        verify_taylor_lower(
            "sample", grid_points=grid_points, precision_cap=precision_cap
        ),
        verify_taylor_lower("certify", precision_cap=precision_cap),
        verify_pi_lower(sweep_limit, precision_cap=precision_cap),
        verify_nth_prime_lower(sweep_limit, precision_cap=precision_cap),
        verify_log_refinement(sweep_limit, precision_cap=precision_cap),
        verify_prime_square_tail(
            q_limit, cutoff=cutoff, precision_cap=precision_cap
        ),
        verify_prime_square_product(
            q_limit, cutoff=cutoff, precision_cap=precision_cap
        ),
    ]
