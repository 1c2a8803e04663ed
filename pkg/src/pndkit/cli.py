"""Command-line front end.

Exit codes: 0 success / no violations; 1 at least one certified Fails
(or a failed spoof test, or a refuted candidate); 2 usage or input
error; 3 Undecided results remain at the precision cap. Output is
deterministic for fixed inputs, including across --jobs counts.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Iterable, Optional

from . import bounds, divfun, search, sieve
from .numkernel import Factorization, factorize
from .realcert import PRECISION_CAP_DEFAULT
from .spoof import (
    SpoofFactorization,
    is_spoof_perfect,
    parse_spoof,
    sigma_tilde,
    to_exact_factorization,
)

_INT_RE = re.compile(r"[0-9]+$")


def _parse_spoof_arg(text: str) -> SpoofFactorization:
    text = text.strip()
    if _INT_RE.match(text):
        return SpoofFactorization.from_factorization(factorize(int(text)))
    return parse_spoof(text)


def _parse_factorization_arg(text: str) -> Factorization:
    text = text.strip()
    if _INT_RE.match(text):
        return factorize(int(text))
    return to_exact_factorization(_parse_spoof_arg(text))


def _json_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _record_text(r: bounds.BoundCheckRecord) -> str:
    subj = " ".join(f"{k}={v}" for k, v in r.subject)
    line = f"{r.bound_id}  {subj}  {r.verdict}"
    if r.hypothesis_failures:
        line += f"  [{', '.join(r.hypothesis_failures)}]"
    if r.notes:
        line += f"  ({'; '.join(r.notes)})"
    return line


class _Tally:
    """Verdict accumulator mapping onto the exit-code contract."""

    def __init__(self):
        self.fails = 0
        self.undecided = 0
        self.total = 0

    def add(self, verdict: str) -> None:
        self.total += 1
        if verdict == "Fails":
            self.fails += 1
        elif verdict == "Undecided":
            self.undecided += 1

    @property
    def exit_code(self) -> int:
        if self.fails:
            return 1
        if self.undecided:
            return 3
        return 0


def _emit_records(
    records: Iterable[bounds.BoundCheckRecord], fmt: str, tally: _Tally
) -> None:
    for r in records:
        tally.add(r.verdict)
        if fmt == "text":
            print(_record_text(r))
        else:
            print(_json_line(r.to_json()))


# ---------------------------------------------------------------------------
# Subcommands

def _cmd_compute(args) -> int:
    f = _parse_factorization_arg(args.number)
    cls = divfun.classify(f)
    record = {
        "n": f.value,
        "factorization": str(f),
        "sigma": divfun.sigma(f),
        "h": str(divfun.abundancy(f)),
        "H": str(divfun.abundancy_limit(f)),
        "T": str(divfun.prime_reciprocal_sum(f)),
        "surplus": str(divfun.surplus(f)),
        "derivative": divfun.arithmetic_derivative(f),
        "radical": divfun.radical(f),
        "classification": cls.value,
        "primitive_nondeficient": divfun.is_primitive_nondeficient(f),
    }
    if args.format == "text":
        width = max(len(k) for k in record)
        for k, v in record.items():
            print(f"{k:<{width}}  {v}")
    else:
        print(_json_line(record))
    return 0


def _cmd_enumerate(args) -> int:
    count = 0
    for f in sieve.enumerate_primitive_nondeficient(
        args.limit, odd_only=args.odd_only, jobs=args.jobs
    ):
        count += 1
        if args.format == "text":
            print(f"{f.value} = {f}")
        else:
            print(_json_line({"n": f.value, "factorization": str(f)}))
    if args.format == "text":
        print(f"total: {count}")
    return 0


def _cmd_verify(args) -> int:
    tally = _Tally()
    fmt = args.format
    cap = args.precision_cap
    suites = (
        ["bounds", "shape", "lemmas", "tricky-specials", "c-estimate"]
        if args.suite == "all"
        else [args.suite]
    )
    for suite in suites:
        if suite == "bounds":
            limit = args.limit or 100_000
            _emit_records(
                bounds.run_pnd_bound_suite(
                    limit,
                    odd_only=args.odd_only,
                    precision_cap=cap,
                    jobs=args.jobs,
                ),
                fmt,
                tally,
            )
        elif suite == "shape":
            limit = args.limit or 100_000
            _emit_records(
                bounds.run_shape_suite(limit, jobs=args.jobs), fmt, tally
            )
        elif suite == "lemmas":
            limit = args.limit or 1_000_000
            _emit_records(
                bounds.run_lemma_suite(sweep_limit=limit, precision_cap=cap),
                fmt,
                tally,
            )
        elif suite == "tricky-specials":
            limit = args.limit or 1_000_000
            rep = bounds.no_tricky_specials_scan(limit)
            record = {
                "suite": "tricky-specials",
                "q_limit": rep.q_limit,
                "scanned": rep.scanned,
                "witnesses": list(rep.witnesses),
                "lemma_checks": rep.lemma_checks,
                "lemma_violations": list(rep.lemma_violations),
                "clean": rep.clean,
            }
            tally.add("Holds" if rep.clean else "Fails")
            if fmt == "text":
                state = "clean" if rep.clean else f"witnesses {rep.witnesses}"
                print(
                    f"tricky-specials  q<={rep.q_limit}  scanned={rep.scanned}"
                    f"  lemma_checks={rep.lemma_checks}  {state}"
                )
            else:
                print(_json_line(record))
        elif suite == "c-estimate":
            limit = args.limit or 100_000
            est = bounds.estimate_surplus_constant(
                limit, odd_only=args.odd_only, jobs=args.jobs
            )
            record = {
                "suite": "c-estimate",
                "limit": est.limit,
                "odd_only": est.odd_only,
                "value": None if est.value is None else str(est.value),
                "attained_at": est.attained_at,
            }
            tally.add("Holds")
            if fmt == "text":
                print(
                    f"c-estimate  limit={est.limit}  max (H-2)p1 = {est.value}"
                    f"  at n={est.attained_at}"
                )
            else:
                print(_json_line(record))
    if fmt == "text":
        print(
            f"records: {tally.total}  fails: {tally.fails}"
            f"  undecided: {tally.undecided}"
        )
    return tally.exit_code


def _cmd_spoof(args) -> int:
    sf = _parse_spoof_arg(args.factorization)
    st = sigma_tilde(sf)
    ok = is_spoof_perfect(sf)
    if args.format == "text":
        print(f"value: {sf.value}")
        print(f"sigma-tilde: {st}")
        print(f"spoof perfect: {'true' if ok else 'false'}")
    else:
        print(
            _json_line(
                {
                    "candidate": str(sf),
                    "value": sf.value,
                    "sigma_tilde": st,
                    "spoof_perfect": ok,
                }
            )
        )
    return 0 if ok else 1


def _parse_special(text: str) -> tuple[int, int]:
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base), int(exp)
    return int(text), 1


def _cmd_check_candidate(args) -> int:
    sf = _parse_spoof_arg(args.factorization)
    special = _parse_special(args.special) if args.special else None
    report = bounds.opn_candidate_report(
        sf,
        special=special,
        check_primality=args.check_primality,
        precision_cap=args.precision_cap,
    )
    tally = _Tally()
    _emit_records(report.records, args.format, tally)
    summary = {
        "candidate": str(report.candidate),
        "value": report.value,
        "verdict": report.verdict,
        "special": list(report.special) if report.special else None,
        "refuting": list(report.refuting),
    }
    if args.format == "text":
        print(f"verdict: {report.verdict}")
        if report.refuting:
            print(f"refuted by: {', '.join(report.refuting)}")
        if report.special:
            print(f"special pair: {report.special}")
    else:
        print(_json_line(summary))
    return tally.exit_code


def _cmd_search(args) -> int:
    fmt = args.format

    def frac(q) -> str:
        # exact when compact, decimal approximation when the exact form
        # would be unreadable
        s = str(q)
        return s if len(s) <= 40 else f"~{float(q):.9f}"

    def emit_report(rep: search.ScanReport) -> None:
        if fmt == "text":
            for c in rep.witnesses:
                print(
                    f"witness {c.cell}: H_lower={frac(c.h_lower)}"
                    f" with_p={frac(c.h_with_p)}"
                )
            for c in rep.inconclusive:
                print(f"inconclusive {c.cell}: {c.note}")
            print(
                f"{rep.question}: scanned={rep.cells_scanned}"
                f"  non_witnesses={rep.non_witnesses}"
                f"  witnesses={len(rep.witnesses)}"
                f"  inconclusive={len(rep.inconclusive)}"
            )
        else:
            for line in rep.json_lines():
                print(_json_line(line))

    if args.question == "1":
        emit_report(
            search.search_question1(
                args.p_limit or 100_000,
                factor_budget=args.factor_budget,
                seed=args.seed,
            )
        )
    elif args.question == "2":
        emit_report(
            search.search_question2(
                args.m_limit or 50,
                args.p_limit or 1_000,
                factor_budget=args.factor_budget,
                seed=args.seed,
            )
        )
    elif args.question == "3":
        emit_report(
            search.search_question3(
                args.p_limit or 100,
                args.a_limit or 20,
                factor_budget=args.factor_budget,
                seed=args.seed,
            )
        )
    elif args.question == "anchors":
        cells = [
            search.sigma_power_anchor(5, 5, factor_budget=args.factor_budget),
            search.sigma_power_anchor(7, 944, factor_budget=args.factor_budget),
        ]
        for c in cells:
            if fmt == "text":
                print(
                    f"anchor {c.cell}: {c.verdict}  H_lower={frac(c.h_lower)}"
                    f"  with_p={frac(c.h_with_p)}  complete={c.complete}  {c.note}"
                )
            else:
                print(_json_line(c.to_json("anchors")))
    elif args.question == "prop3":
        rep = search.search_prop3_witness(prime_floor=args.prime_floor)
        if fmt == "text":
            print(f"configs tried: {rep.configs_tried}")
            for name, ok in rep.reference.hypotheses:
                print(f"reference {name}: {'met' if ok else 'NOT met'}")
            if rep.reference.note:
                print(f"reference note: {rep.reference.note}")
            for w in rep.witnesses:
                print(f"witness: {w}")
        else:
            print(
                _json_line(
                    {
                        "question": "prop3",
                        "prime_floor": rep.prime_floor,
                        "configs_tried": rep.configs_tried,
                        "reference_hypotheses": dict(rep.reference.hypotheses),
                        "reference_note": rep.reference.note,
                        "witnesses": [str(w) for w in rep.witnesses],
                    }
                )
            )
    return 0


def _cmd_fixtures(args) -> int:
    seq = args.sequence.upper()
    if args.action == "generate":
        values, header = sieve.generate_fixture(seq, args.limit)
        if args.fixture:
            sieve.write_fixture(args.fixture, values, header)
            print(f"wrote {len(values)} values to {args.fixture}")
        else:
            for line in header:
                print(f"# {line}")
            for v in values:
                print(v)
        return 0
    # crosscheck
    values, _ = sieve.generate_fixture(seq, args.limit)
    report = sieve.crosscheck_fixture(values, args.fixture)
    if args.format == "text":
        print(f"crosscheck {seq}: {report}")
    else:
        print(
            _json_line(
                {
                    "sequence": seq,
                    "compared": report.compared,
                    "matched": report.matched,
                    "first_mismatch": list(report.first_mismatch)
                    if report.first_mismatch
                    else None,
                }
            )
        )
    return 0 if report.matched else 1


def _print_gcd15_table() -> None:
    print("Bounds for an odd perfect number n, by gcd(n, 15)")
    print(f"{'gcd':>4}  {'T lower':>10}  {'T upper':>10}  {'H upper':>10}")
    for g in (1, 3, 5, 15):
        t_lo, t_hi = bounds.T_GCD15_TABLE[g]
        h_hi = bounds.H_GCD15_TABLE[g]
        print(
            f"{g:>4}  {float(t_lo):>10.6f}  {float(t_hi):>10.6f}"
            f"  {float(h_hi):>10.6f}"
        )
    print("T table: Cohen, Hagis, and Suryanarayana (1978-1985).")
    print("H table: Suryanarayana.")


# ---------------------------------------------------------------------------
# Parser wiring

def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "json", "jsonl"),
        default="text",
        help="output format (json and jsonl both emit JSON lines)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pndkit",
        description="Primitive non-deficient numbers: exact invariants, "
        "certified bound checks, enumeration, and witness searches.",
    )
    parser.add_argument(
        "--gcd15-table",
        action="store_true",
        help="print the gcd(n,15) reference table of T and H bounds and exit",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="divisor-function profile of one n")
    p.add_argument("number", help="integer or factorization like 3^2*5*7")
    _add_format(p)

    p = sub.add_parser(
        "enumerate", help="stream primitive non-deficient numbers"
    )
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)

    p = sub.add_parser("verify", help="run certified verification suites")
    p.add_argument(
        "--suite",
        choices=(
            "bounds",
            "shape",
            "lemmas",
            "tricky-specials",
            "c-estimate",
            "all",
        ),
        default="all",
    )
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--precision-cap", type=int, default=PRECISION_CAP_DEFAULT)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)

    p = sub.add_parser("spoof", help="test a factorization for spoof perfection")
    p.add_argument("factorization", help='grammar like "3^2*7^2*11^2*13^2*22021"')
    _add_format(p)

    p = sub.add_parser(
        "check-candidate",
        help="run every odd-perfect structural constraint on a candidate",
    )
    p.add_argument("factorization")
    p.add_argument(
        "--special",
        default=None,
        help="designate the special pair, e.g. 22021 or 22021^1",
    )
    p.add_argument("--check-primality", action="store_true")
    p.add_argument("--precision-cap", type=int, default=PRECISION_CAP_DEFAULT)
    _add_format(p)

    p = sub.add_parser("search", help="budgeted witness searches")
    p.add_argument(
        "--question",
        choices=("1", "2", "3", "anchors", "prop3"),
        required=True,
    )
    p.add_argument("--p-limit", type=int, default=None)
    p.add_argument("--m-limit", type=int, default=None)
    p.add_argument("--a-limit", type=int, default=None)
    p.add_argument("--factor-budget", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime-floor", type=int, default=11)
    _add_format(p)

    p = sub.add_parser("fixtures", help="sequence fixture files")
    p.add_argument("action", choices=("generate", "crosscheck"))
    p.add_argument("--sequence", required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--fixture", default=None, help="fixture file path")
    _add_format(p)

    return parser


_HANDLERS = {
    "compute": _cmd_compute,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "spoof": _cmd_spoof,
    "check-candidate": _cmd_check_candidate,
    "search": _cmd_search,
    "fixtures": _cmd_fixtures,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.gcd15_table:
        _print_gcd15_table()
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    if args.command == "fixtures" and args.action == "crosscheck" and not args.fixture:
        parser.error("crosscheck requires --fixture")
    try:
        return _HANDLERS[args.command](args)
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the stream; not an error
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
