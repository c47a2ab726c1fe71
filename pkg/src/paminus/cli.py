"""Command-line front end.

Exit codes are uniform across subcommands: 0 = pass, 1 = a mathematical
counterexample was found (any such exit falsifies published mathematics or
reveals a bug, so scripts should fail loudly), 2 = usage or parse error.
With --json every report is a single JSON document; identical seeded
invocations produce identical JSON apart from elapsed_ms, regardless of
--threads.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .logic import Add, Eq, Exists, Mul, ONE, Var, Variable, numeral
from .models import (
    EvalBudget,
    PolyModel,
    StandardModel,
    Truth,
    below_numeral,
    check_axioms,
    eval_formula,
)
from .numtheory import (
    DomainError,
    PreconditionError,
    fraction_sum,
    is_integer,
    kurschak_certificate,
    search_harmonic_counterexample,
    search_nagell_counterexample,
)
from .prover import ProblemFile, export_problem, standard_problem
from .sentences import harmonic_sentence, nagell_sentence
from .syntax import ParseError, parse_formula, print_formula


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    params: dict
    outcome: str  # pass | fail | unknown
    details: dict
    elapsed_ms: int

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "params": self.params,
            "outcome": self.outcome,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"outcome: {self.outcome}"]
        for key, value in self.params.items():
            lines.append(f"  {key}: {value}")
        lines.append(f"details: {json.dumps(self.details, sort_keys=True)}")
        lines.append(f"elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)


def _emit(report: RunReport, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_text())


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _nat(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return value


def _nat1(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _cmd_gen(args) -> int:
    sentence = (
        harmonic_sentence(args.k) if args.kind == "phi" else nagell_sentence(args.k)
    )
    if args.format == "native":
        print(print_formula(sentence))
        return 0
    name = f"{args.kind}_{args.k}"
    if args.include_axioms:
        text = export_problem(standard_problem(name, sentence))
    else:
        text = export_problem(ProblemFile((), (name, sentence)))
    sys.stdout.write(text)
    return 0


def _cmd_check(args) -> int:
    start = time.perf_counter()
    if args.kind == "harmonic":
        if args.n is None:
            raise UsageError("check harmonic requires --n")
        if args.m is None:
            numerators = [1] * (args.k + 1)
        else:
            numerators = [int(x) for x in args.m.split(",")]
        value = fraction_sum(args.n, args.k, numerators)
        integer = is_integer(value)
        report = RunReport(
            command="check",
            params={"kind": "harmonic", "n": args.n, "k": args.k, "m": numerators},
            outcome="fail" if integer else "pass",
            details={"value": str(value), "is_integer": integer},
            elapsed_ms=_elapsed_ms(start),
        )
        _emit(report, args.json)
        return 1 if integer else 0
    if args.kind == "phi-search":
        if args.n_max is None:
            raise UsageError("check phi-search requires --n-max")
        outcome = search_harmonic_counterexample(
            args.k,
            args.n_max,
            exhaustive_m=not args.sampled,
            samples=args.samples,
            cap=args.cap,
            seed=args.seed,
            threads=args.threads,
        )
    else:  # nagell
        if args.m_max is None or args.n_max is None:
            raise UsageError("check nagell requires --m-max and --n-max")
        outcome = search_nagell_counterexample(
            args.k, args.m_max, args.n_max, threads=args.threads
        )
    report = RunReport(
        command="check",
        params={"kind": args.kind, **outcome.params},
        outcome="fail" if outcome.found else "pass",
        details=outcome.as_dict(),
        elapsed_ms=_elapsed_ms(start),
    )
    _emit(report, args.json)
    return 1 if outcome.found else 0


def _cmd_kurschak(args) -> int:
    start = time.perf_counter()
    try:
        cert = kurschak_certificate(args.n, args.k)
    except RuntimeError as e:
        report = RunReport(
            command="kurschak",
            params={"n": args.n, "k": args.k},
            outcome="fail",
            details={"error": str(e)},
            elapsed_ms=_elapsed_ms(start),
        )
        _emit(report, args.json)
        return 1
    report = RunReport(
        command="kurschak",
        params={"n": args.n, "k": args.k},
        outcome="pass",
        details=cert.as_dict(),
        elapsed_ms=_elapsed_ms(start),
    )
    _emit(report, args.json)
    return 0


def _make_model(args):
    if args.model == "standard":
        return StandardModel()
    return PolyModel(
        sample_degree=args.degree, sample_coeff_bound=args.coeff_bound
    )


def _cmd_model(args) -> int:
    start = time.perf_counter()
    model = _make_model(args)
    budget = EvalBudget(max_witness=args.budget)
    if args.action == "check-axioms":
        checks = check_axioms(model, args.samples, budget, seed=args.seed)
        failures = sum(c.failed for c in checks)
        unknowns = sum(c.unknown for c in checks)
        outcome = "fail" if failures else ("unknown" if unknowns else "pass")
        report = RunReport(
            command="model",
            params={
                "action": "check-axioms",
                "model": model.name,
                "samples": args.samples,
                "seed": args.seed,
            },
            outcome=outcome,
            details={"axioms": [c.as_dict() for c in checks]},
            elapsed_ms=_elapsed_ms(start),
        )
        _emit(report, args.json)
        return 1 if failures else 0
    if args.action == "parity-demo":
        if args.model != "poly":
            raise UsageError("parity-demo runs in the poly model")
        element = model.parse_element(args.element or "[0, 1]")
        x, y = Variable("x"), Variable("y")
        asg = {x: element}
        even = Exists(y, Eq(Var(x), Mul(numeral(2), Var(y))))
        odd = Exists(y, Eq(Var(x), Add(Mul(numeral(2), Var(y)), ONE)))
        even_value = eval_formula(model, asg, even, budget)
        odd_value = eval_formula(model, asg, odd, budget)
        both_false = even_value is Truth.FALSE and odd_value is Truth.FALSE
        report = RunReport(
            command="model",
            params={
                "action": "parity-demo",
                "model": model.name,
                "element": model.format_element(element),
            },
            outcome="pass" if both_false else "fail",
            details={
                "even_multiple": even_value.value,
                "odd_plus_one": odd_value.value,
            },
            elapsed_ms=_elapsed_ms(start),
        )
        _emit(report, args.json)
        return 0 if both_false else 1
    # below-numeral
    if args.element is None or args.k is None:
        raise UsageError("model below-numeral requires --element and --k")
    element = model.parse_element(args.element)
    result = below_numeral(model, element, args.k)
    report = RunReport(
        command="model",
        params={
            "action": "below-numeral",
            "model": model.name,
            "element": model.format_element(element),
            "k": args.k,
        },
        outcome="pass",
        details={"result": result},
        elapsed_ms=_elapsed_ms(start),
    )
    _emit(report, args.json)
    return 0


def _cmd_parse(args) -> int:
    start = time.perf_counter()
    try:
        text = Path(args.file).read_text()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        ast = parse_formula(text)
    except ParseError as e:
        report = RunReport(
            command="parse",
            params={"file": args.file},
            outcome="fail",
            details={"error": str(e), "offset": e.offset},
            elapsed_ms=_elapsed_ms(start),
        )
        _emit(report, args.json)
        return 2
    canonical = print_formula(ast)
    round_trip = parse_formula(canonical) == ast
    report = RunReport(
        command="parse",
        params={"file": args.file},
        outcome="pass" if round_trip else "fail",
        details={"canonical": canonical, "round_trip": round_trip},
        elapsed_ms=_elapsed_ms(start),
    )
    _emit(report, args.json)
    return 0 if round_trip else 1


def _cmd_report(args) -> int:
    from . import figures

    start = time.perf_counter()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []

    harmonic = search_harmonic_counterexample(1, args.n_max, seed=args.seed)
    rows.append(
        {
            "check": "harmonic-search",
            "params": f"k=1 n_max={args.n_max}",
            "outcome": "fail" if harmonic.found else "pass",
            "instances": harmonic.instances_checked,
            "note": harmonic.mode,
        }
    )
    for k in (1, 2, 3):
        nagell = search_nagell_counterexample(k, 30, 30)
        rows.append(
            {
                "check": "nagell-search",
                "params": f"k={k} m_max=30 n_max=30",
                "outcome": "fail" if nagell.found else "pass",
                "instances": nagell.instances_checked,
                "note": nagell.mode,
            }
        )
    cert = kurschak_certificate(48, 16)
    rows.append(
        {
            "check": "kurschak",
            "params": "n=48 k=16",
            "outcome": "pass",
            "instances": 1,
            "note": f"unique_index={cert.unique_index} a={cert.a}",
        }
    )
    checks = check_axioms(PolyModel(), args.samples, seed=args.seed)
    failures = sum(c.failed for c in checks)
    rows.append(
        {
            "check": "axioms-poly",
            "params": f"samples={args.samples} seed={args.seed}",
            "outcome": "fail" if failures else "pass",
            "instances": sum(c.samples for c in checks),
            "note": f"failures={failures}",
        }
    )

    csv_path = out / "report.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.DictWriter(
            handle, fieldnames=["check", "params", "outcome", "instances", "note"]
        )
        writer.writeheader()
        writer.writerows(rows)

    figure_paths = [
        figures.valuation_profile_figure(out / "valuations.png", 48, 16),
        figures.harmonic_denominator_figure(
            out / "harmonic_denominators.png", args.n_max, 2
        ),
        figures.nagell_denominator_figure(out / "nagell_denominators.png", 30, 30, 2),
        figures.axiom_outcome_figure(out / "axiom_checks.png", checks),
    ]

    all_pass = all(row["outcome"] == "pass" for row in rows)
    report = RunReport(
        command="report",
        params={"out": str(out), "n_max": args.n_max, "samples": args.samples,
                "seed": args.seed},
        outcome="pass" if all_pass else "fail",
        details={
            "csv": str(csv_path),
            "figures": [str(p) for p in figure_paths],
            "checks": rows,
        },
        elapsed_ms=_elapsed_ms(start),
    )
    _emit(report, args.json)
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=_nat, default=0, help="seed for sampling")
    common.add_argument(
        "--threads", type=_nat1, default=1, help="worker threads for searches"
    )
    common.add_argument(
        "--budget", type=_nat1, default=64, help="witnesses tried per quantifier"
    )

    parser = argparse.ArgumentParser(
        prog="paminus",
        description="Workbench for induction-free ordered arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print a generated sentence")
    p.add_argument(
        "kind",
        choices=["phi", "nu"],
        help="phi: consecutive denominators; nu: arithmetic progression",
    )
    p.add_argument("k", type=_nat1)
    p.add_argument("--format", choices=["native", "prover"], default="native")
    p.add_argument(
        "--include-axioms",
        action="store_true",
        help="prover format only: prepend the 15 axioms",
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", parents=[common], help="run a non-integrality check")
    p.add_argument("kind", choices=["harmonic", "nagell", "phi-search"])
    p.add_argument("--k", type=_nat1, required=True)
    p.add_argument("--n", type=_nat1, help="harmonic: first denominator")
    p.add_argument("--m", help="harmonic: comma-separated numerators (default all 1)")
    p.add_argument("--n-max", dest="n_max", type=_nat)
    p.add_argument("--m-max", dest="m_max", type=_nat)
    p.add_argument(
        "--sampled",
        action="store_true",
        help="phi-search: sample numerator vectors instead of enumerating",
    )
    p.add_argument("--samples", type=_nat1, default=1000)
    p.add_argument("--cap", type=_nat1, default=10**7)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "kurschak", parents=[common], help="emit the odd/even certificate for a window"
    )
    p.add_argument("n", type=_nat1)
    p.add_argument("k", type=_nat1)
    p.set_defaults(func=_cmd_kurschak)

    p = sub.add_parser("model", parents=[common], help="evaluate in a model")
    p.add_argument("action", choices=["check-axioms", "parity-demo", "below-numeral"])
    p.add_argument("model", nargs="?", choices=["standard", "poly"], default="poly")
    p.add_argument("--samples", type=_nat1, default=500)
    p.add_argument("--degree", type=_nat, default=3, help="poly sampling degree bound")
    p.add_argument(
        "--coeff-bound", dest="coeff_bound", type=_nat1, default=10,
        help="poly sampling coefficient bound",
    )
    p.add_argument("--element", help='model element: "7" or "[0, 1]"')
    p.add_argument("--k", type=_nat1, help="below-numeral: the numeral bound")
    p.set_defaults(func=_cmd_model)

    p = sub.add_parser(
        "parse", parents=[common], help="parse a formula file and round-trip it"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser(
        "report",
        parents=[common],
        help="run the standard battery; write CSV and figures",
    )
    p.add_argument("--out", default="paminus-report")
    p.add_argument("--n-max", dest="n_max", type=_nat1, default=60)
    p.add_argument("--samples", type=_nat1, default=200)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (DomainError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
