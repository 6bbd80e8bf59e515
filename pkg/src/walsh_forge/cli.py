"""Command-line entry point.

Exit codes: 0 verified, 1 falsified (counterexamples in the report),
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .expsums import c_table, verify_prop1
from .family import cross_validate, fact1_scan, verify_theorem1
from .funcspec import FunctionSpecError, parse_function_spec
from .gf import FieldCtx, FieldError, build_field
from .niho import _root_codes, verify_cor1, verify_cor2, verify_prop3
from .params import FamilyParams
from .report import Report, merge
from .units import verify_prop2
from .walsh import classify, walsh_spectrum

# (p, k) -> estimated cost in character evaluations (p^2n for the spectrum / C table)
BUDGET = {(3, 1): 3**8, (5, 1): 5**8, (7, 1): 7**8, (3, 2): 3**16}
SPECTRUM_SIZE_CAP = 20000
CLAIMS = ("theorem1", "fact1", "prop1", "prop2", "prop3", "cor1", "cor2", "crosscheck", "all")


class UsageError(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _field(args) -> FieldCtx:
    if getattr(args, "field", None):
        ctx = formats.load_field(args.field)
        if args.p is not None and (ctx.p, ctx.n) != (args.p, args.n):
            raise UsageError("--field disagrees with --p/--n")
        return ctx
    if args.p is None or args.n is None:
        raise UsageError("need --p and --n (or --field)")
    return build_field(args.p, args.n)


def cmd_field(args) -> int:
    ctx = _field(args)
    text = formats.field_json(ctx)
    _write(text, args.out)
    if args.out:
        print(f"{ctx!r}, {ctx.q} elements, xi = {list(ctx.xi.coords)}")
    return 0


def cmd_spectrum(args) -> int:
    fspec = parse_function_spec(args.f)
    ctx = _field(args)
    if ctx.q > SPECTRUM_SIZE_CAP and not args.budget_override:
        raise UsageError(f"spectrum over {ctx.q} elements exceeds the cap {SPECTRUM_SIZE_CAP} "
                         f"(use --budget-override)")
    try:
        f = fspec.to_function(ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = str(fspec)
    entries = formats.cached_spectrum(ctx, text)
    if entries is not None:
        spec = formats.spectrum_from_entries(f, entries)
    else:
        spec = walsh_spectrum(f, jobs=args.jobs)
        formats.store_spectrum(spec, text)
    verdict = classify(spec).verdict
    if args.format == "csv":
        body = formats.spectrum_to_csv(spec)
    else:
        body = formats.dumps({**formats.spectrum_to_json(spec), "verdict": verdict})
    if args.out:
        Path(args.out).write_text(body)
    print(f"{text} over GF({ctx.p}^{ctx.n}): {verdict}")
    return 0


def _artifacts(claim: str, params: FamilyParams, directory: Path) -> list[str]:
    ctx = params.field()
    directory.mkdir(parents=True, exist_ok=True)
    tag = f"{claim}_p{params.p}_k{params.k}"
    if claim == "theorem1":
        from .family import family_function
        path = directory / f"{tag}_spectrum.csv"
        path.write_text(formats.spectrum_to_csv(walsh_spectrum(family_function(params))))
    elif claim == "prop1":
        path = directory / f"{tag}_ctable.csv"
        path.write_text(formats.ctable_to_csv(c_table(params)))
    elif claim == "prop2":
        rows: list = []
        verify_prop2(params, rows=rows)
        path = directory / f"{tag}_counts.csv"
        path.write_text(formats.counts_to_csv(ctx, rows))
    elif claim == "prop3":
        roots = {ctx.from_code(int(c)): [ctx.from_code(int(x)) for x in _root_codes(params, 1, int(c))]
                 for c in ctx.subfield_codes(params.k)}
        path = directory / f"{tag}_roots.csv"
        path.write_text(formats.roots_to_csv(ctx, roots))
    else:
        return []
    return [str(path)]


def run_claim(claim: str, params: FamilyParams, jobs: int = 1) -> Report:
    if claim == "theorem1":
        return verify_theorem1(params, jobs=jobs)
    if claim == "fact1":
        return fact1_scan()
    runners = {"prop1": verify_prop1, "prop2": verify_prop2, "prop3": verify_prop3,
               "cor1": verify_cor1, "cor2": verify_cor2, "crosscheck": cross_validate}
    return runners[claim](params)


def cmd_verify(args) -> int:
    params = None
    if args.claim != "fact1":
        if args.p is None or args.k is None:
            raise UsageError("need --p and --k")
        try:
            params = FamilyParams(args.p, args.k)
        except FieldError as exc:
            raise UsageError(str(exc)) from exc
        if (args.p, args.k) not in BUDGET and not args.budget_override:
            admitted = ", ".join(f"({p},{k})" for p, k in BUDGET)
            raise UsageError(f"(p, k) = ({args.p}, {args.k}) is over the runtime budget; "
                             f"admitted: {admitted} (use --budget-override)")
    if args.claim == "all":
        reports = [run_claim(c, params, args.jobs) for c in CLAIMS if c != "all"]
        report = merge("all", params.as_dict(), reports)
    else:
        report = run_claim(args.claim, params, args.jobs)
    if args.artifacts:
        names = [c for c in CLAIMS if c != "all"] if args.claim == "all" else [args.claim]
        for c in names:
            if params is not None:
                report.artifacts.extend(_artifacts(c, params, Path(args.artifacts)))
    if args.out:
        Path(args.out).write_text(report.dumps() + "\n")
    print(report.summary())
    for ce in report.counterexamples[:10]:
        print("  counterexample:", ce)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="walsh-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pf = sub.add_parser("field", help="construct GF(p^n) and write its description")
    pf.add_argument("--p", type=int)
    pf.add_argument("--n", type=int)
    pf.add_argument("--field", help="existing field description JSON to validate")
    pf.add_argument("--out")
    pf.set_defaults(func=cmd_field)

    ps = sub.add_parser("spectrum", help="Walsh spectrum of a trace-form function")
    ps.add_argument("--p", type=int)
    ps.add_argument("--n", type=int)
    ps.add_argument("--field", help="field description JSON")
    ps.add_argument("--f", required=True, help='e.g. "Tr(x^34 + x^2)"')
    ps.add_argument("--out")
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--budget-override", action="store_true")
    ps.set_defaults(func=cmd_spectrum)

    pv = sub.add_parser("verify", help="exhaustively verify a claim")
    pv.add_argument("claim", choices=CLAIMS)
    pv.add_argument("--p", type=int)
    pv.add_argument("--k", type=int)
    pv.add_argument("--out", help="report JSON path")
    pv.add_argument("--artifacts", help="directory for CSV exports")
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--budget-override", action="store_true")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FunctionSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
