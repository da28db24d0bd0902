"""Command-line front end.

Exit status: 0 on success, 1 when the request is refused by the theory
(impossible evidence, formula not believed, failed validation, ...), 2 on
usage, syntax or file errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .belief import EpistemicState
from .errors import DomainError, NotNormalized, SyntaxProblem
from .fileio import format_measure, load_measure, load_partition, save_measure
from .measure import QuasiMeasure, extend, validate
from .proplang import as_formula, eval_event, format_formula
from .valuation import Algebra, check_axioms, classify, format_value, sample_values


def _split_given(words: Sequence[str]) -> tuple[list[str], str | None]:
    words = list(words)
    if "given" in words:
        i = words.index("given")
        if i != len(words) - 2:
            raise SyntaxProblem("expected exactly one formula after 'given'")
        return words[:i], words[i + 1]
    return words, None


def _normalized(path: str) -> QuasiMeasure:
    m = load_measure(path)
    if m.total() != m.algebra.e:
        raise NotNormalized(
            f"{path}: table total is {format_value(m.total())}, not {format_value(m.algebra.e)}"
            " (add a trailing 'normalize' line to rescale it)"
        )
    return m


def cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    m = _normalized(args.file)
    print(format_value(m.measure_of(eval_event(args.formula, m.space))), file=out)
    return 0


def cmd_cond(args: argparse.Namespace, out: TextIO) -> int:
    formulas, given = _split_given(args.formulas)
    if len(formulas) != 1:
        raise SyntaxProblem('usage: cond -f STATE "phi" [given "psi"]')
    m = _normalized(args.file)
    A = eval_event(formulas[0], m.space)
    B = eval_event(given or "true", m.space)
    print(format_value(m.conditional(A, B)), file=out)
    return 0


def cmd_indep(args: argparse.Namespace, out: TextIO) -> int:
    formulas, given = _split_given(args.formulas)
    if not formulas:
        raise SyntaxProblem('usage: indep -f STATE "phi1" "phi2" ... [given "psi"]')
    m = _normalized(args.file)
    parsed = [as_formula(f) for f in formulas]
    events = [eval_event(f, m.space) for f in parsed]
    witness = m.dependence_witness(events, eval_event(given or "true", m.space))
    if witness is None:
        print("yes", file=out)
    else:
        print("no: " + ", ".join(format_formula(parsed[i]) for i in witness), file=out)
    return 0


def cmd_believe(args: argparse.Namespace, out: TextIO) -> int:
    state = EpistemicState(load_measure(args.file))
    print("yes" if state.believes(args.formula) else "no", file=out)
    return 0


def cmd_entrench(args: argparse.Namespace, out: TextIO) -> int:
    state = EpistemicState(load_measure(args.file))
    print(format_value(state.entrenchment(args.formula)), file=out)
    return 0


def cmd_revise(args: argparse.Namespace, out: TextIO) -> int:
    state = EpistemicState(load_measure(args.file))
    if args.mode == "full":
        new = state.revise_full(args.formula)
    else:
        new = state.revise_shift(args.formula, args.delta)
    if args.output:
        save_measure(new.measure, args.output)
    else:
        out.write(format_measure(new.measure))
    return 0


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    try:
        alg = Algebra.from_name(args.algebra)
    except ValueError as exc:
        raise SyntaxProblem(str(exc)) from None
    print(classify(alg), file=out)
    return 0


def cmd_extend(args: argparse.Namespace, out: TextIO) -> int:
    out.write(format_measure(extend(load_partition(args.file))))
    return 0


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    m = load_measure(args.file)
    alg = m.algebra
    report = validate(m, pairs=args.pairs, seed=args.seed)
    samples = list(dict.fromkeys([alg.n, alg.e, *m.values, *sample_values(alg, 40, args.seed)]))
    axioms = check_axioms(alg, samples, tuples=args.tuples, seed=args.seed)
    print(report.render(), file=out)
    print(axioms.render(), file=out)
    return 0 if report.ok and axioms.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quasiprob",
        description="Evaluate, condition and revise quasi-probabilistic measures.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def state_cmd(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("-f", "--file", required=True, metavar="STATE", help="measure file")
        return sp

    sp = state_cmd("eval", "print the value of a formula")
    sp.add_argument("formula")
    sp.set_defaults(func=cmd_eval)

    sp = state_cmd("cond", 'print the conditional value of a formula: "phi" [given "psi"]')
    sp.add_argument("formulas", nargs="+", metavar="ARG")
    sp.set_defaults(func=cmd_cond)

    sp = state_cmd("indep", 'test (conditional) independence: "phi1" "phi2" ... [given "psi"]')
    sp.add_argument("formulas", nargs="+", metavar="ARG")
    sp.set_defaults(func=cmd_indep)

    sp = state_cmd("believe", "is the formula plainly believed (yes/no)")
    sp.add_argument("formula")
    sp.set_defaults(func=cmd_believe)

    sp = state_cmd("entrench", "value of the negation of a believed formula")
    sp.add_argument("formula")
    sp.set_defaults(func=cmd_entrench)

    sp = state_cmd("revise", "revise the state by a formula and write the new state")
    sp.add_argument("formula")
    sp.add_argument("--mode", choices=("full", "shift"), default="shift")
    sp.add_argument("--delta", default="1", help="rank shift for --mode shift (default 1)")
    sp.add_argument("-o", "--output", metavar="OUT", help="output file (default: stdout)")
    sp.set_defaults(func=cmd_revise)

    sp = sub.add_parser("classify", help="print SP, SH or SR for an algebra")
    sp.add_argument("--algebra", required=True, metavar="KIND", help="e.g. real, ranking-z, cumulative-q")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("extend", help="canonical powerset extension of a partition measure")
    sp.add_argument("-f", "--file", required=True, metavar="PARTITION")
    sp.set_defaults(func=cmd_extend)

    sp = state_cmd("validate", "check normalization, additivity and the algebra axioms")
    sp.add_argument("--pairs", type=int, default=256, help="disjoint event pairs to sample")
    sp.add_argument("--tuples", type=int, default=2000, help="value triples for the axiom check")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_validate)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except SyntaxProblem as exc:
        print(f"error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
