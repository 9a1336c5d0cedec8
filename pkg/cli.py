"""Command line front end: every decision and certificate as JSON or text.

    python cli.py reversible --group pslz --word "a b a b^2"
    python cli.py gen-torsion --n 3 --group pslz --word "a b a b"
    python cli.py seifert --spec "(O,o,0|1;(2,1),(3,1));boundaries=1" families
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from core.config import get_settings
from core.errors import TorsionError
from core.log import configure_logging
from models.verdicts import SearchBudget, Verdict
from schemas.results import QueryResult
from services import queries
from services.oracle import SUITES

logger = logging.getLogger(__name__)

EXIT_DECIDED = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_element_flags(p: argparse.ArgumentParser, other: bool = False) -> None:
    p.add_argument("--group", default="pslz", help="pslz, b3 or seifert:<spec> (default pslz)")
    p.add_argument("--word", required=True, help='element, e.g. "a b a b^2"')
    if other:
        p.add_argument("--other", required=True, help="second element")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torsion", description="Reversibility and generalised torsion in PSL(2,Z), B3 and Seifert groups")
    parser.add_argument("--format", choices=("json", "text"), default="json", help="output format (default json)")
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    _add_element_flags(sub.add_parser("normalize", help="reduced normal form"))
    _add_element_flags(sub.add_parser("classify", help="isometry class of the PSL(2,Z) image"))
    _add_element_flags(sub.add_parser("conjugate", help="decide conjugacy and give a conjugator"), other=True)
    _add_element_flags(sub.add_parser("reversible", help="decide reversibility"))

    p = sub.add_parser("gen-torsion", help="generalised n-torsion (n = 2, 3)")
    _add_element_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="conjugator syllable bound for hyperbolic searches")

    p = sub.add_parser("braid", help="normal form of a braid word in s1, s2, x, y, h")
    p.add_argument("--word", required=True)

    p = sub.add_parser("seifert", help="presentation, quotient and families of a Seifert-fibered space")
    p.add_argument("action", choices=queries.SEIFERT_ACTIONS)
    p.add_argument("--spec", required=True, help='e.g. "(O,o,0|1;(2,1),(3,1));boundaries=1"')
    p.add_argument("--word", default=None)
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("verify", help="re-validate a certificate")
    p.add_argument("--certificate", default=None, help="certificate JSON, or a QueryResult holding one")
    p.add_argument("--file", default=None, help="read the certificate from a file; - for stdin")

    p = sub.add_parser("sweep", help="compare structural deciders with brute-force oracles")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-syllables", type=int, default=None)
    p.add_argument("--max-central", type=int, default=None)
    p.add_argument("--max-candidates", type=int, default=None)
    return parser


def _certificate_payload(args) -> str:
    if args.certificate is not None:
        return args.certificate
    if args.file == "-":
        return sys.stdin.read()
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    raise UsageError("verify needs --certificate or --file")


def _budget(args) -> SearchBudget:
    base = queries.default_budget()
    return SearchBudget(
        args.max_syllables or base.max_conjugator_syllables,
        args.max_central or base.max_central_exponent,
        args.max_candidates or base.max_candidates,
    )


def dispatch(args) -> QueryResult:
    command = args.command
    if command == "normalize":
        return queries.normalize(args.group, args.word)
    if command == "classify":
        return queries.classify(args.group, args.word)
    if command == "conjugate":
        return queries.conjugate(args.group, args.word, args.other)
    if command == "reversible":
        return queries.reversible(args.group, args.word)
    if command == "gen-torsion":
        return queries.gen_torsion(args.group, args.word, args.n, args.bound)
    if command == "braid":
        return queries.braid(args.word)
    if command == "seifert":
        return queries.seifert_query(args.action, args.spec, args.word, args.n)
    if command == "verify":
        return queries.verify(_certificate_payload(args))
    return queries.sweep(args.suite, _budget(args))


def render_text(result: QueryResult) -> str:
    lines = [f"verdict: {result.verdict}"]
    if result.normal_form is not None:
        lines.append(f"normal form: {result.normal_form}")
    if result.certificate is not None:
        for key, value in result.certificate.model_dump(exclude_none=True).items():
            lines.append(f"certificate.{key}: {value}")
    for key, value in (result.data or {}).items():
        lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
    for note in result.diagnostics:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def exit_code(result: QueryResult) -> int:
    return EXIT_UNKNOWN if result.verdict == Verdict.UNKNOWN.value else EXIT_DECIDED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.log_level or get_settings().log_level)
        result = dispatch(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except TorsionError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: invalid-input: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(result.to_json() if args.format == "json" else render_text(result))
    logger.info("%s -> %s", args.command, result.verdict)
    return exit_code(result)


if __name__ == "__main__":
    sys.exit(main())
