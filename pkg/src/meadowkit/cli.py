"""Command-line front end: eval, logic, axioms, tables, lint.

Exit codes: 0 success / defined / all-pass; 1 parse or usage error;
2 unbound variable or non-enumerable quantifier carrier; 3 "third
value" (UNDEFINED, U, or an Unknown lint verdict); 4 axiom failure or
lint violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .carriers import FiniteProbeSet, PrimeField, RATIONALS, CarrierMismatchError, format_element, parse_rational
from .lint import Convention, VerdictKind, lint, parse_corpus
from .logic import (
    ConnectiveFamily,
    NonEnumerableCarrierError,
    TruthValue,
    classify_sentence,
    connective_table,
    eval_formula,
    parse_logic_config,
)
from .parser import ParseError, parse_formula, parse_term
from .semantics import (
    UNDEFINED,
    Exhaustive,
    Mode,
    RandomSample,
    StructureSpec,
    UnboundVariableError,
    axiom_catalog,
    eval_partial,
    verify_axiom_spec,
    _ax,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNBOUND = 2
EXIT_THIRD = 3
EXIT_FAIL = 4


def _parse_carrier(text: str):
    text = text.strip().lower()
    if text == "rationals":
        return RATIONALS
    if text.startswith("gf"):
        try:
            return PrimeField(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    if text.startswith("probe:"):
        try:
            values = tuple(parse_rational(v) for v in text[len("probe:"):].split(","))
            return FiniteProbeSet(values=values)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError(f"unknown carrier {text!r}")


def _parse_mode(text: str) -> Mode:
    try:
        return Mode(text.strip().lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown mode {text!r}") from None


def _parse_bindings(pairs, carrier):
    env = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValueError(f"binding must look like x=2/3, got {pair!r}")
        name, value = pair.split("=", 1)
        if isinstance(carrier, PrimeField):
            env[name.strip()] = carrier.from_int(int(value))
        else:
            env[name.strip()] = parse_rational(value)
    return env


def _add_structure_flags(p: argparse.ArgumentParser):
    p.add_argument("--carrier", type=_parse_carrier, default=RATIONALS,
                   help="rationals (default), gf<p>, or probe:<v1>,<v2>,...")
    p.add_argument("--mode", type=_parse_mode, default=Mode.TOTAL,
                   help="total (default), punch-inv, punch-div-all, punch-div-nonzero")


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meadowkit",
        description="Totalized rational arithmetic, logics of partial functions, "
        "and a division-convention linter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term")
    _add_structure_flags(p)
    _add_common_flags(p)
    p.add_argument("-b", "--bind", action="append", metavar="x=2/3")
    p.add_argument("term")

    p = sub.add_parser("logic", help="evaluate a formula in a three-valued logic")
    _add_structure_flags(p)
    _add_common_flags(p)
    p.add_argument("--logic", default="lpmd",
                   help="<equality>,<connectives>,<quantifiers> or lpmd (default)")
    p.add_argument("--classify", action="store_true",
                   help="apply the two-valued logic convention")
    p.add_argument("-b", "--bind", action="append", metavar="x=2/3")
    p.add_argument("formula")

    p = sub.add_parser("axioms", help="verify the built-in axiom catalog")
    _add_common_flags(p)
    p.add_argument("--carrier", type=_parse_carrier, default=RATIONALS)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extra", action="append", metavar="EQUATION",
                   help="extra equation to check, e.g. 'x/x = 1'")

    p = sub.add_parser("tables", help="print the truth tables of a connective family")
    _add_common_flags(p)
    p.add_argument("family", choices=[f.value for f in ConnectiveFamily])

    p = sub.add_parser("lint", help="lint a statement corpus against a convention")
    _add_common_flags(p)
    p.add_argument("--convention", choices=[c.value for c in Convention],
                   default=Convention.DIVISION.value)
    p.add_argument("corpus")

    return parser


def _cmd_eval(args) -> int:
    structure = StructureSpec(args.carrier, args.mode)
    term = parse_term(args.term)
    env = _parse_bindings(args.bind, args.carrier)
    value = eval_partial(term, env, structure)
    defined = value is not UNDEFINED
    if args.format == "json":
        print(json.dumps({
            "term": args.term,
            "defined": defined,
            "value": format_element(value) if defined else None,
        }))
    else:
        print(format_element(value) if defined else "UNDEFINED")
    return EXIT_OK if defined else EXIT_THIRD


def _cmd_logic(args) -> int:
    structure = StructureSpec(args.carrier, args.mode)
    cfg = parse_logic_config(args.logic)
    formula = parse_formula(args.formula)
    env = _parse_bindings(args.bind, args.carrier)
    if args.classify:
        verdict = classify_sentence(formula, cfg, structure)
        if args.format == "json":
            print(json.dumps({
                "usable": verdict.usable,
                "value": str(verdict.value) if verdict.usable else None,
            }))
        else:
            print(verdict)
        return EXIT_OK if verdict.usable else EXIT_THIRD
    tv = eval_formula(formula, cfg, env, structure)
    if args.format == "json":
        print(json.dumps({"formula": args.formula, "truth_value": str(tv)}))
    else:
        print(tv)
    return EXIT_OK if tv is not TruthValue.U else EXIT_THIRD


def _cmd_axioms(args) -> int:
    structure = StructureSpec(args.carrier)
    if args.carrier.enumerable:
        strategy = Exhaustive()
    else:
        strategy = RandomSample(args.samples, args.seed)
    catalog = list(axiom_catalog())
    for i, text in enumerate(args.extra or ()):
        catalog.append(_ax(f"extra-{i}", text))
    reports = [verify_axiom_spec(spec, structure, strategy) for spec in catalog]
    if args.format == "json":
        print(json.dumps({"reports": [
            {
                "name": r.name,
                "axiom": r.equation,
                "passed": r.passed,
                "samples": r.samples,
                "witness": {k: format_element(v) for k, v in sorted(r.witness.items())}
                if r.witness is not None else None,
            }
            for r in reports
        ]}))
    else:
        for r in reports:
            print(r.format_line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


_TABLE_SYMBOLS = {"not": "!", "and": "&", "or": "|", "implies": "=>"}


def _cmd_tables(args) -> int:
    family = ConnectiveFamily(args.family)
    tables = connective_table(family)
    if args.format == "json":
        doc = {"family": family.value}
        for name, table in tables.items():
            if name == "not":
                doc[name] = {str(a): str(v) for a, v in table.items()}
            else:
                doc[name] = {f"{a},{b}": str(v) for (a, b), v in table.items()}
        print(json.dumps(doc))
        return EXIT_OK
    for name, table in tables.items():
        sym = _TABLE_SYMBOLS[name]
        print(f"{name}:")
        if name == "not":
            for a, v in table.items():
                print(f"{sym} {a} -> {v}")
        else:
            for (a, b), v in table.items():
                print(f"{a} {sym} {b} -> {v}")
    return EXIT_OK


def _cmd_lint(args) -> int:
    try:
        with open(args.corpus, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        corpus = parse_corpus(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    verdicts = lint(corpus, Convention(args.convention))
    if args.format == "json":
        print(json.dumps({"verdicts": [v.to_dict() for v in verdicts]}))
    else:
        for v in verdicts:
            print(v.format_line())
    kinds = {v.kind for v in verdicts}
    if VerdictKind.VIOLATION in kinds:
        return EXIT_FAIL
    if VerdictKind.UNKNOWN in kinds:
        return EXIT_THIRD
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "logic": _cmd_logic,
    "axioms": _cmd_axioms,
    "tables": _cmd_tables,
    "lint": _cmd_lint,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; fold into the parse-error code
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UnboundVariableError, NonEnumerableCarrierError, CarrierMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNBOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
