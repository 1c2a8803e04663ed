"""Certified comparison of real-valued expressions.

Expressions are finite trees over exact rational constants with add, sub,
mul, div, neg, log, exp, and pow nodes. Evaluation produces a two-sided
enclosure computed with MPFR directed rounding (round-down for lower
endpoints, round-up for upper), so the true real value always lies inside
the reported interval. Comparisons escalate the working precision,
starting at 64 bits and doubling to a cap, and return a three-valued
verdict: Holds and Fails are certificates, Undecided means the enclosures
still overlap at the cap. Structurally identical sides are decided
without any evaluation.

Directed rounding at doubled precision can only shrink an enclosure
(every p-bit dyadic is also a 2p-bit dyadic), which is what makes
escalation monotone: a verdict reached at precision P cannot flip at a
higher precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

import gmpy2

PRECISION_START = 64
PRECISION_CAP_DEFAULT = 1 << 14

RationalLike = Union[int, Fraction]


class Verdict(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNDECIDED = "Undecided"


class EvalDomainError(ArithmeticError):
    """Expression left the domain of a node (log of nonpositive, div by 0).

    definite=True means the violation is certain (e.g. log of an interval
    entirely <= 0); definite=False means the enclosure merely straddles
    the boundary and a higher precision might resolve it.
    """

    def __init__(self, message: str, definite: bool = True):
        super().__init__(message)
        self.definite = definite


# ---------------------------------------------------------------------------
# Expression trees

_VALID_OPS = frozenset(
    {"const", "add", "sub", "mul", "div", "neg", "log", "exp", "pow"}
)


@dataclass(frozen=True)
class RealExpr:
    """Immutable expression node. Equality/hash are structural."""

    op: str
    args: tuple = ()
    q: Optional[Fraction] = None  # const value, or pow exponent

    def __post_init__(self):
        if self.op not in _VALID_OPS:
            raise ValueError(f"unknown op {self.op!r}")

    # arithmetic sugar; non-expression operands are coerced to constants
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return neg(self)

    def __str__(self):
        if self.op == "const":
            return str(self.q)
        if self.op == "neg":
            return f"(-{self.args[0]})"
        if self.op in ("log", "exp"):
            return f"{self.op}({self.args[0]})"
        if self.op == "pow":
            return f"({self.args[0]})^({self.q})"
        sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[self.op]
        return f"({self.args[0]} {sym} {self.args[1]})"


def const(x: RationalLike) -> RealExpr:
    """Exact rational constant leaf."""
    if isinstance(x, RealExpr):
        return x
    if not isinstance(x, _RationalABC):
        raise TypeError(f"constants must be exact rationals, got {type(x)}")
    return RealExpr("const", q=Fraction(x))


def _coerce(x) -> RealExpr:
    return x if isinstance(x, RealExpr) else const(x)


def add(a, b) -> RealExpr:
    return RealExpr("add", (_coerce(a), _coerce(b)))


def sub(a, b) -> RealExpr:
    return RealExpr("sub", (_coerce(a), _coerce(b)))


def mul(a, b) -> RealExpr:
    return RealExpr("mul", (_coerce(a), _coerce(b)))


def div(a, b) -> RealExpr:
    return RealExpr("div", (_coerce(a), _coerce(b)))


def neg(a) -> RealExpr:
    return RealExpr("neg", (_coerce(a),))


def log(a) -> RealExpr:
    return RealExpr("log", (_coerce(a),))


def exp(a) -> RealExpr:
    return RealExpr("exp", (_coerce(a),))


def pow_(base, exponent: RationalLike) -> RealExpr:
    """base raised to an exact rational exponent."""
    return RealExpr("pow", (_coerce(base),), q=Fraction(exponent))


LOG2 = log(const(2))


def exact_value(expr: RealExpr) -> Optional[Fraction]:
    """The exact rational value of expr, or None when it is irrational
    (or not provably rational by structure: log/exp away from 1/0)."""
    if expr.op == "const":
        return expr.q
    vals = [exact_value(a) for a in expr.args]
    if any(v is None for v in vals):
        return None
    if expr.op == "add":
        return vals[0] + vals[1]
    if expr.op == "sub":
        return vals[0] - vals[1]
    if expr.op == "mul":
        return vals[0] * vals[1]
    if expr.op == "div":
        if vals[1] == 0:
            raise EvalDomainError("division by exact zero")
        return vals[0] / vals[1]
    if expr.op == "neg":
        return -vals[0]
    if expr.op == "log":
        if vals[0] <= 0:
            raise EvalDomainError(f"log of nonpositive value {vals[0]}")
        return Fraction(0) if vals[0] == 1 else None
    if expr.op == "exp":
        return Fraction(1) if vals[0] == 0 else None
    if expr.op == "pow":
        e = expr.q
        if e.denominator == 1:
            b = vals[0]
            if e >= 0:
                return b ** e.numerator
            if b == 0:
                raise EvalDomainError("zero to a negative power")
            return b ** e.numerator
        return None
    raise AssertionError(expr.op)


# ---------------------------------------------------------------------------
# Directed interval arithmetic on MPFR endpoints

_CTX_CACHE: dict[tuple[int, bool], "gmpy2.context"] = {}


def _ctx(prec: int, up: bool):
    key = (prec, up)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = gmpy2.context(
            precision=prec,
            round=gmpy2.RoundUp if up else gmpy2.RoundDown,
        )
        _CTX_CACHE[key] = ctx
    return ctx


@dataclass(frozen=True)
class Interval:
    """Closed interval with dyadic (MPFR) endpoints, lo <= hi."""

    lo: object  # gmpy2.mpfr
    hi: object  # gmpy2.mpfr

    @classmethod
    def from_rational(cls, q: RationalLike, prec: int) -> "Interval":
        q = Fraction(q)
        v = gmpy2.mpq(q.numerator, q.denominator)
        return cls(
            gmpy2.mpfr(v, context=_ctx(prec, False)),
            gmpy2.mpfr(v, context=_ctx(prec, True)),
        )

    @classmethod
    def from_endpoints(
        cls, lo: RationalLike, hi: RationalLike, prec: int
    ) -> "Interval":
        """Enclosure of the rational interval [lo, hi]."""
        if lo > hi:
            raise ValueError("lo > hi")
        a = Fraction(lo)
        b = Fraction(hi)
        return cls(
            gmpy2.mpfr(gmpy2.mpq(a.numerator, a.denominator), context=_ctx(prec, False)),
            gmpy2.mpfr(gmpy2.mpq(b.numerator, b.denominator), context=_ctx(prec, True)),
        )

    @property
    def lo_rational(self) -> Fraction:
        return Fraction(*self.lo.as_integer_ratio())

    @property
    def hi_rational(self) -> Fraction:
        return Fraction(*self.hi.as_integer_ratio())

    @property
    def width(self) -> Fraction:
        return self.hi_rational - self.lo_rational

    def contains(self, q: RationalLike) -> bool:
        return self.lo <= Fraction(q) <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def iv_add(a: Interval, b: Interval, prec: int) -> Interval:
    return Interval(
        _ctx(prec, False).add(a.lo, b.lo), _ctx(prec, True).add(a.hi, b.hi)
    )


def iv_sub(a: Interval, b: Interval, prec: int) -> Interval:
    return Interval(
        _ctx(prec, False).sub(a.lo, b.hi), _ctx(prec, True).sub(a.hi, b.lo)
    )


def iv_neg(a: Interval, prec: int) -> Interval:
    # bare unary minus would re-round through the global context
    return Interval(_ctx(prec, False).minus(a.hi), _ctx(prec, True).minus(a.lo))


def iv_mul(a: Interval, b: Interval, prec: int) -> Interval:
    d = _ctx(prec, False)
    u = _ctx(prec, True)
    lo = min(
        d.mul(a.lo, b.lo), d.mul(a.lo, b.hi), d.mul(a.hi, b.lo), d.mul(a.hi, b.hi)
    )
    hi = max(
        u.mul(a.lo, b.lo), u.mul(a.lo, b.hi), u.mul(a.hi, b.lo), u.mul(a.hi, b.hi)
    )
    return Interval(lo, hi)


def iv_div(a: Interval, b: Interval, prec: int) -> Interval:
    if b.lo <= 0 <= b.hi:
        raise EvalDomainError(
            "division by interval containing zero",
            definite=(b.lo == 0 and b.hi == 0),
        )
    d = _ctx(prec, False)
    u = _ctx(prec, True)
    lo = min(
        d.div(a.lo, b.lo), d.div(a.lo, b.hi), d.div(a.hi, b.lo), d.div(a.hi, b.hi)
    )
    hi = max(
        u.div(a.lo, b.lo), u.div(a.lo, b.hi), u.div(a.hi, b.lo), u.div(a.hi, b.hi)
    )
    return Interval(lo, hi)


def iv_log(a: Interval, prec: int) -> Interval:
    if a.lo <= 0:
        raise EvalDomainError(
            f"log of interval not strictly positive: {a}", definite=(a.hi <= 0)
        )
    return Interval(_ctx(prec, False).log(a.lo), _ctx(prec, True).log(a.hi))


def iv_exp(a: Interval, prec: int) -> Interval:
    return Interval(_ctx(prec, False).exp(a.lo), _ctx(prec, True).exp(a.hi))


def _ipow_dir(x, n: int, ctx):
    """x**n (n >= 1) under one rounding direction by binary exponentiation."""
    acc = None
    base = x
    while n:
        if n & 1:
            acc = base if acc is None else ctx.mul(acc, base)
        n >>= 1
        if n:
            base = ctx.mul(base, base)
    return acc


def iv_pow(a: Interval, e: Fraction, prec: int) -> Interval:
    """Interval power with exact rational exponent.

    Integer exponents use sign analysis; fractional exponents require a
    strictly positive base and go through exp(e * log(a)).
    """
    e = Fraction(e)
    if e.denominator == 1:
        n = e.numerator
        if n == 0:
            one = gmpy2.mpfr(1)
            return Interval(one, one)
        if n < 0:
            return iv_div(
                Interval.from_rational(1, prec), iv_pow(a, -e, prec), prec
            )
        d = _ctx(prec, False)
        u = _ctx(prec, True)
        # one-direction rounding through _ipow_dir is monotone only for
        # nonnegative bases (a sign flip reverses the needed direction
        # mid-chain), so every negative case reduces to a positive one
        # through negation, which never rounds
        if a.lo >= 0:
            return Interval(_ipow_dir(a.lo, n, d), _ipow_dir(a.hi, n, u))
        if a.hi <= 0:
            m = iv_neg(a, prec)
            pos = Interval(_ipow_dir(m.lo, n, d), _ipow_dir(m.hi, n, u))
            return iv_neg(pos, prec) if n % 2 == 1 else pos
        mag_lo = u.minus(a.lo)
        if n % 2 == 1:
            return Interval(
                d.minus(_ipow_dir(mag_lo, n, u)), _ipow_dir(a.hi, n, u)
            )
        # even power of an interval straddling zero
        hi = max(_ipow_dir(mag_lo, n, u), _ipow_dir(a.hi, n, u))
        return Interval(gmpy2.mpfr(0), hi)
    if a.lo <= 0:
        raise EvalDomainError(
            f"fractional power of nonpositive base {a}", definite=(a.hi <= 0)
        )
    e_iv = Interval.from_rational(e, prec)
    return iv_exp(iv_mul(e_iv, iv_log(a, prec), prec), prec)


def eval_interval(expr: RealExpr, precision_bits: int = PRECISION_START) -> Interval:
    """Two-sided enclosure of expr at the given working precision."""
    if precision_bits < 2:
        raise ValueError("precision must be at least 2 bits")
    if expr.op == "const":
        return Interval.from_rational(expr.q, precision_bits)
    args = [eval_interval(a, precision_bits) for a in expr.args]
    if expr.op == "add":
        return iv_add(args[0], args[1], precision_bits)
    if expr.op == "sub":
        return iv_sub(args[0], args[1], precision_bits)
    if expr.op == "mul":
        return iv_mul(args[0], args[1], precision_bits)
    if expr.op == "div":
        return iv_div(args[0], args[1], precision_bits)
    if expr.op == "neg":
        return iv_neg(args[0], precision_bits)
    if expr.op == "log":
        return iv_log(args[0], precision_bits)
    if expr.op == "exp":
        return iv_exp(args[0], precision_bits)
    if expr.op == "pow":
        return iv_pow(args[0], expr.q, precision_bits)
    raise AssertionError(expr.op)


# ---------------------------------------------------------------------------
# Certified comparison

_RELATION_ALIASES = {
    "<": "<",
    "<=": "<=",
    ">": ">",
    ">=": ">=",
    "≤": "<=",
    "≥": ">=",
}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one certified comparison.

    Enclosure fields are exact rationals (dyadic endpoints from the final
    evaluation), or None when the verdict needed no evaluation.
    """

    verdict: Verdict
    relation: str
    lhs_lo: Optional[Fraction] = None
    lhs_hi: Optional[Fraction] = None
    rhs_lo: Optional[Fraction] = None
    rhs_hi: Optional[Fraction] = None
    precision_bits: int = 0
    witness: Optional[dict] = None
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


def _decide(l: Interval, r: Interval, relation: str) -> Verdict:
    if relation == "<":
        if l.hi < r.lo:
            return Verdict.HOLDS
        if l.lo >= r.hi:
            return Verdict.FAILS
    elif relation == "<=":
        if l.hi <= r.lo:
            return Verdict.HOLDS
        if l.lo > r.hi:
            return Verdict.FAILS
    elif relation == ">":
        if l.lo > r.hi:
            return Verdict.HOLDS
        if l.hi <= r.lo:
            return Verdict.FAILS
    elif relation == ">=":
        if l.lo >= r.hi:
            return Verdict.HOLDS
        if l.hi < r.lo:
            return Verdict.FAILS
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return Verdict.UNDECIDED


def decide_at(
    lhs: RealExpr, rhs: RealExpr, relation: str, precision_bits: int
) -> Verdict:
    """One-shot decision at a fixed precision (UNDECIDED if it overlaps)."""
    relation = _RELATION_ALIASES[relation]
    return _decide(
        eval_interval(lhs, precision_bits),
        eval_interval(rhs, precision_bits),
        relation,
    )


def _exact_relation(lv: Fraction, rv: Fraction, relation: str) -> Verdict:
    ok = {
        "<": lv < rv,
        "<=": lv <= rv,
        ">": lv > rv,
        ">=": lv >= rv,
    }[relation]
    return Verdict.HOLDS if ok else Verdict.FAILS


def compare_certified(
    lhs,
    rhs,
    relation: str,
    precision_cap: int = PRECISION_CAP_DEFAULT,
) -> CheckResult:
    """Certified three-valued comparison of two expressions.

    Short-circuits structurally identical sides, resolves all-rational
    sides exactly, and otherwise escalates interval precision from 64
    bits, doubling up to precision_cap. Holds/Fails are certificates;
    Undecided means the cap was reached with overlapping enclosures.
    """
    lhs = _coerce(lhs)
    rhs = _coerce(rhs)
    rel = _RELATION_ALIASES.get(relation)
    if rel is None:
        raise ValueError(f"unknown relation {relation!r}")
    if precision_cap < PRECISION_START:
        raise ValueError("precision cap below starting precision")

    if lhs == rhs:
        verdict = Verdict.HOLDS if rel in ("<=", ">=") else Verdict.FAILS
        return CheckResult(
            verdict, rel, note="structural equality short circuit"
        )

    lv = exact_value(lhs)
    rv = exact_value(rhs)
    if lv is not None and rv is not None:
        return CheckResult(
            _exact_relation(lv, rv, rel),
            rel,
            lhs_lo=lv,
            lhs_hi=lv,
            rhs_lo=rv,
            rhs_hi=rv,
            precision_bits=0,
            note="exact rational comparison",
        )

    prec = PRECISION_START
    pending_domain_error: Optional[EvalDomainError] = None
    l_iv = r_iv = None
    while True:
        try:
            l_iv = eval_interval(lhs, prec)
            r_iv = eval_interval(rhs, prec)
            pending_domain_error = None
        except EvalDomainError as err:
            if err.definite:
                raise
            pending_domain_error = err
        if pending_domain_error is None:
            verdict = _decide(l_iv, r_iv, rel)
            if verdict is not Verdict.UNDECIDED or prec >= precision_cap:
                return CheckResult(
                    verdict,
                    rel,
                    lhs_lo=l_iv.lo_rational,
                    lhs_hi=l_iv.hi_rational,
                    rhs_lo=r_iv.lo_rational,
                    rhs_hi=r_iv.hi_rational,
                    precision_bits=prec,
                )
        elif prec >= precision_cap:
            raise pending_domain_error
        prec = min(prec * 2, precision_cap)
