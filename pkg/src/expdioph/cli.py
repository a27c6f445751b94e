"""Command-line front end.

Exit codes: 0 success, 1 domain-level negative (tuple does not hold),
2 usage error, 3 fast/naive valuation disagreement, 4 lemma suite failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from typing import Iterable, Sequence

from . import arith, lemmas, solvers
from .equation import CaseId, EquationError, ExponentTuple, classify, holds, normalize, zero_pattern
from .records import Record, RunManifest, write_csv, write_jsonl

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DISAGREE, EXIT_LEMMA = 0, 1, 2, 3, 4

# flags that change how a run executes but not what it computes
_EXECUTION_ONLY = {"workers", "out", "format", "timing", "seed", "func", "command"}


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return int(text)


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _emit(args: argparse.Namespace, records: Iterable[Record], started: float) -> None:
    records = list(records)
    writer = write_csv if args.format == "csv" else write_jsonl
    if args.out is None:
        writer(sys.stdout, records, None)
        return
    params = {k: v for k, v in vars(args).items() if k not in _EXECUTION_ONLY and v is not None}
    manifest = RunManifest(args.command, params, seed=args.seed)
    if args.timing:
        manifest.wall_time_ms = int((time.perf_counter() - started) * 1000)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer(fh, records, manifest)


def cmd_valuation(args: argparse.Namespace, started: float) -> int:
    if args.base < 2 or args.a < 2 or args.n < 1:
        raise UsageError("need --base >= 2, --a >= 2, --n >= 1")
    sign = 1 if args.sign == "plus" else -1
    fast = naive = None
    if args.mode in ("fast", "both"):
        fn = arith.valuation_pow_plus_one if sign == 1 else arith.valuation_pow_minus_one
        fast = fn(args.base, args.a, args.n).exponent
    if args.mode in ("naive", "both"):
        naive = arith.naive_valuation_pow(args.base, args.a, args.n, sign)
    if fast is not None and naive is not None and fast != naive:
        print(f"fast path gives {fast}, naive path gives {naive}", file=sys.stderr)
        return EXIT_DISAGREE
    v = fast if fast is not None else naive
    if args.format == "text":
        op = "+" if sign == 1 else "-"
        print(f"v_{args.base}({args.a}^{args.n} {op} 1) = {v}")
    else:
        fields = {"base": args.base, "a": args.a, "n": args.n, "sign": args.sign, "v": v}
        _emit(args, [Record("valuation", fields)], started)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, started: float) -> int:
    if args.which == "prop6":
        sols = solvers.solve_prop6(args.k_max or 10, args.m_max or 60, args.n_max or 60)
        recs = [Record("prop6_solution", {"k": s.k, "m": s.m, "n": s.n}) for s in sols]
    else:
        if args.m_max is not None:
            raise UsageError("prop9 takes --p-max/--q-max, not --m-max")
        sols9 = solvers.solve_prop9(
            args.k_max or 8, args.p_max or 40, args.q_max or 40, args.n_max or 12
        )
        recs = [Record("prop9_solution", {"k": s.k, "p": s.p, "q": s.q, "n": s.n}) for s in sols9]
    _emit(args, recs, started)
    return EXIT_OK


def _case_record(inst) -> Record:
    return Record("case_solution", {"case": inst.case_id.label, **inst.as_dict()})


def cmd_search(args: argparse.Namespace, started: float) -> int:
    if args.case == "master":
        sols = solvers.search_master(args.bound, workers=args.workers)
        recs = [
            Record(
                "master_solution",
                {
                    **s.exponents._asdict(),
                    "case": s.case.case_id.label,
                    "binding": s.case.as_dict(),
                },
            )
            for s in sols
        ]
    else:
        try:
            case_id = CaseId.from_label(args.case)
        except EquationError as exc:
            raise UsageError(str(exc)) from exc
        recs = [_case_record(i) for i in solvers.search_case(case_id, args.bound, args.workers)]
    _emit(args, recs, started)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, started: float) -> int:
    try:
        t = ExponentTuple.parse(args.tuple)
    except EquationError as exc:
        raise UsageError(str(exc)) from exc
    if not holds(t):
        print(f"{t.format()}: equation does not hold", file=sys.stderr)
        return EXIT_NEGATIVE
    nt = normalize(t)
    count2, count3 = zero_pattern(nt)
    inst = classify(nt)
    assert inst is not None
    if args.format == "text":
        binding = ",".join(f"{k}={v}" for k, v in inst.as_dict().items())
        print(f"normalized: {nt.format()}")
        print(f"zeros: {count2} among a,c,e,g; {count3} among b,d,f,h")
        print(f"case: {inst.case_id.name} ({inst.case_id.display})")
        print(f"binding: {binding}")
    else:
        fields = {
            "tuple": t.format(),
            "normalized": nt.format(),
            "count2": count2,
            "count3": count3,
            "case": inst.case_id.label,
            "binding": inst.as_dict(),
        }
        _emit(args, [Record("classification", fields)], started)
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace, started: float) -> int:
    try:
        reports = solvers.scan_conjecture(args.m_min, args.m_max, args.n_max, args.workers)
    except solvers.SearchError as exc:
        raise UsageError(str(exc)) from exc
    recs = [
        Record(
            "conjecture_report",
            {"m": r.base_m, "n_max": r.n_max, "violations": r.violations, "minimal_N": r.minimal_N},
        )
        for r in reports
    ]
    recs.append(
        Record(
            "conjecture_summary",
            {
                "m_min": args.m_min,
                "m_max": args.m_max,
                "n_max": args.n_max,
                "max_minimal_N": solvers.max_minimal_n(reports),
            },
        )
    )
    _emit(args, recs, started)
    return EXIT_OK


def cmd_verify_lemmas(args: argparse.Namespace, started: float) -> int:
    ranges = lemmas.SuiteRanges()
    if args.base:
        if any(b % 2 == 0 or b < 3 for b in args.base):
            raise UsageError("lemma requires odd base")
        ranges = replace(ranges, odd_minus_bases=tuple(args.base))
    if args.n_max is not None:
        ranges = replace(ranges, odd_minus_n_max=args.n_max)
    if args.p_max is not None:
        ranges = replace(ranges, cyclo_p=tuple(range(2, args.p_max + 1)))
    if args.m_max is not None:
        ranges = replace(ranges, cyclo_max=args.m_max)
    try:
        results = lemmas.run_lemma_suites(ranges, args.lemma or None)
    except lemmas.LemmaError as exc:
        raise UsageError(str(exc)) from exc
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name} ({res.checked} checks)")
        for line in res.failures:
            print(f"    counterexample {line}")
    if args.out is not None:
        recs = [
            Record(
                "lemma_suite",
                {"name": r.name, "checked": r.checked, "passed": r.passed, "failures": r.failures},
            )
            for r in results
        ]
        _emit(args, recs, started)
    return EXIT_OK if all(r.passed for r in results) else EXIT_LEMMA


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expdioph",
        description="Exact solvers and checks for 2^a3^b + 2^c3^d = 2^e3^f + 2^g3^h and relatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, text_output: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        formats = ["text", "json", "csv"] if text_output else ["json", "csv"]
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="FILE", help="write records (with manifest) to FILE")
        p.add_argument("--seed", type=_natural, default=0)
        p.add_argument("--timing", action="store_true", help="record wall time in the manifest")
        return p

    p = add("valuation", "v_base(a^n +/- 1)", text_output=True)
    p.add_argument("--base", type=_natural, required=True)
    p.add_argument("--a", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--sign", choices=["minus", "plus"], default="minus")
    p.add_argument("--mode", choices=["fast", "naive", "both"], default="both")
    p.set_defaults(func=cmd_valuation)

    p = add("solve", "bounded solver for prop6 / prop9")
    p.add_argument("which", choices=["prop6", "prop9"])
    for flag in ("--k-max", "--m-max", "--n-max", "--p-max", "--q-max"):
        p.add_argument(flag, type=_positive)
    p.set_defaults(func=cmd_solve)

    p = add("search", "bounded search of a case equation")
    p.add_argument("--case", required=True, help="case label (e.g. 3b3d) or 'master'")
    p.add_argument("--bound", type=_natural, default=12)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_search)

    p = add("classify", "normalize and classify a tuple", text_output=True)
    p.add_argument("--tuple", required=True, help="a,b,c,d,e,f,g,h")
    p.set_defaults(func=cmd_classify)

    p = add("conjecture", "scan the even-base inequality")
    p.add_argument("--m-min", type=_natural, default=4)
    p.add_argument("--m-max", type=_natural, default=20)
    p.add_argument("--n-max", type=_positive, default=10_000)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_conjecture)

    p = add("verify-lemmas", "run the lemma property suites")
    p.add_argument("--lemma", action="append", choices=sorted(lemmas.SUITES))
    p.add_argument("--base", type=_natural, action="append", help="odd base for power-odd-minus")
    p.add_argument("--n-max", type=_positive, help="exponent range for power-odd-minus")
    p.add_argument("--p-max", type=_positive, help="largest p for cyclotomic-division")
    p.add_argument("--m-max", type=_positive, help="m, n range for cyclotomic-division")
    p.set_defaults(func=cmd_verify_lemmas)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
