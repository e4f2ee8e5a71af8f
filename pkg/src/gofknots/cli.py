"""Command-line front end for the braid and lens-space calculators.

Every subcommand is pure computation on its arguments: no files, no
network, no randomness.  Output is deterministic — fixed field order,
fixed integer formatting, no timestamps — so invocations can be golden
tested byte for byte.  Booleans print as ``true``/``false`` and missing
values as ``null``, matching the vocabulary of the JSON output.

Braid words are quoted token strings (``"b a a B"`` or ``"s2^-1 s1^2"``),
which keeps negative exponents out of the option grammar.  The one
argument that must start with ``-`` on its own, the Conway tuple, is
handled by inserting a ``--`` separator before parsing.  List-valued
options with negative entries need the equals form, e.g. ``--k=-3,-1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .burau import equal_in_b3, homology_order, represent
from .classify import (
    CheckResult,
    classify_gof,
    exception_isolation_checks,
    is_two_bridge_closure,
    known_conjugate_pairs,
    result_to_record,
    scan_table,
    verify_case_analysis,
)
from .modular import are_conjugate, cyclic_normal_form, project
from .twobridge import (
    DegenerateNotationError,
    NotTwoBridgeLinkError,
    fraction_from_conway,
    lens_equiv,
    lens_space,
    lens_space_of,
    normalize_two_bridge,
)
from .words import BraidParseError, beta, exponent_sum, format_braid, parse_braid


def _fmt(value: object) -> str:
    """Render a value in the fixed CLI vocabulary (null/true/false/str)."""
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _int_range(text: str) -> range:
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    return range(lo, hi + 1)


def _cmd_conjugate(ns: argparse.Namespace) -> int:
    print(_fmt(are_conjugate(parse_braid(ns.word1), parse_braid(ns.word2))))
    return 0


def _cmd_equal(ns: argparse.Namespace) -> int:
    print(_fmt(equal_in_b3(parse_braid(ns.word1), parse_braid(ns.word2))))
    return 0


def _cmd_nf(ns: argparse.Namespace) -> int:
    word = parse_braid(ns.word)
    matrix = represent(word)
    print(f"exponent_sum: {exponent_sum(word)}")
    print(f"matrix: [[{matrix.a}, {matrix.b}], [{matrix.c}, {matrix.d}]]")
    print(f"psl_cyclic_normal_form: {cyclic_normal_form(project(word))}")
    return 0


def _cmd_beta(ns: argparse.Namespace) -> int:
    print(format_braid(beta(ns.k, ns.n)))
    return 0


def _cmd_det(ns: argparse.Namespace) -> int:
    print(homology_order(parse_braid(ns.word)))
    return 0


def _cmd_closure(ns: argparse.Namespace) -> int:
    hit = is_two_bridge_closure(parse_braid(ns.word))
    if hit is None:
        fields = [
            ("two_bridge", False),
            ("alpha", None),
            ("beta", None),
            ("lens_p", None),
            ("lens_q", None),
            ("witness_p", None),
            ("witness_q", None),
            ("mirrored", None),
        ]
    else:
        form, (p, q, mirrored) = hit
        space = lens_space_of(form)
        fields = [
            ("two_bridge", True),
            ("alpha", form.alpha),
            ("beta", form.beta_canonical),
            ("lens_p", space.p),
            ("lens_q", space.q_canonical),
            ("witness_p", p),
            ("witness_q", q),
            ("mirrored", mirrored),
        ]
    for key, value in fields:
        print(f"{key}: {_fmt(value)}")
    return 0


def _cmd_classify(ns: argparse.Namespace) -> int:
    record = result_to_record(classify_gof(ns.k, ns.n))
    if ns.json:
        print(json.dumps(record))
    else:
        for key, value in record.items():
            print(f"{key}: {_fmt(value)}")
    return 0


def _cmd_table(ns: argparse.Namespace) -> int:
    records = [result_to_record(r) for r in scan_table(ns.k, ns.n)]
    if ns.format == "json":
        print(json.dumps(records))
        return 0
    print("k\tn\ttwo_bridge\talpha\tbeta\tlens\tlabel")
    for rec in records:
        lens = (
            "null"
            if rec["lens_p"] is None
            else f"L({rec['lens_p']},{rec['lens_q']})"
        )
        print(
            "\t".join(
                (
                    str(rec["k"]),
                    str(rec["n"]),
                    _fmt(rec["is_two_bridge"]),
                    _fmt(rec["alpha"]),
                    _fmt(rec["beta"]),
                    lens,
                    rec["label"],
                )
            )
        )
    return 0


def _cmd_conway(ns: argparse.Namespace) -> int:
    numerator, denominator = fraction_from_conway(tuple(ns.entries))
    form = normalize_two_bridge(numerator, denominator)
    space = lens_space_of(form)
    print(f"fraction: {numerator}/{denominator}")
    print(f"alpha: {form.alpha}")
    print(f"beta: {form.beta_canonical}")
    print(f"lens_p: {space.p}")
    print(f"lens_q: {space.q_canonical}")
    return 0


def _cmd_lens_eq(ns: argparse.Namespace) -> int:
    first = lens_space(ns.p1, ns.q1)
    second = lens_space(ns.p2, ns.q2)
    print(_fmt(lens_equiv(first, second, oriented=not ns.unoriented)))
    return 0


def _check_line(check: CheckResult) -> str:
    status = "ok" if check.ok else "FAIL"
    return (
        f"[{status}] {check.name}: "
        f"expected {_fmt(check.expected)}, computed {_fmt(check.computed)}"
    )


def _cmd_verify_paper(ns: argparse.Namespace) -> int:
    case_rows = verify_case_analysis()
    extra = known_conjugate_pairs() + exception_isolation_checks()
    for check in case_rows:
        print(_check_line(check))
    case_passed = sum(1 for c in case_rows if c.ok)
    print(f"case rows: {case_passed}/{len(case_rows)} passed")
    for check in extra:
        print(_check_line(check))
    extra_passed = sum(1 for c in extra if c.ok)
    print(f"additional checks: {extra_passed}/{len(extra)} passed")
    all_ok = case_passed == len(case_rows) and extra_passed == len(extra)
    print(f"verify-paper: {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


_WORD_HELP = 'braid word in quotes, e.g. "b a a B" or "s2^-1 s1^2"'


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gofknots",
        description=(
            "Exact three-strand braid algebra, two-bridge arithmetic, and the "
            "classification of genus one fibered knots in lens spaces."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "conjugate", help="decide whether two braid words are conjugate"
    )
    p.add_argument("word1", help=_WORD_HELP)
    p.add_argument("word2", help=_WORD_HELP)
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser(
        "equal", help="decide whether two braid words are equal in the group"
    )
    p.add_argument("word1", help=_WORD_HELP)
    p.add_argument("word2", help=_WORD_HELP)
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser(
        "nf",
        help="print the exponent sum, integral matrix, and cyclic normal form",
    )
    p.add_argument("word", help=_WORD_HELP)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("beta", help="print the word beta(k, n)")
    p.add_argument("k", type=int, help="full-twist half-count (odd for classify)")
    p.add_argument("n", type=int, help="exponent of the trailing twist region")
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser(
        "det", help="print the homology order of the closure's double branched cover"
    )
    p.add_argument("word", help=_WORD_HELP)
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser(
        "closure", help="decide whether the closure is a two-bridge link"
    )
    p.add_argument("word", help=_WORD_HELP)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser(
        "classify", help="classify the genus one fibered knot for beta(k, n)"
    )
    p.add_argument("k", type=int, help="odd number of half twists")
    p.add_argument("n", type=int, help="exponent of the trailing twist region")
    p.add_argument("--json", action="store_true", help="emit the record as JSON")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", help="classify every cell of a (k, n) grid")
    p.add_argument(
        "--k",
        required=True,
        type=_int_list,
        metavar="A,B,C",
        help="comma-separated k values (use --k=-3,-1 when negative)",
    )
    p.add_argument(
        "--n",
        required=True,
        type=_int_range,
        metavar="LO..HI",
        help="inclusive n range (use --n=-8..8 when negative)",
    )
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser(
        "conway",
        help="evaluate a Conway tuple to its fraction, two-bridge form, and lens space",
    )
    p.add_argument(
        "entries",
        type=_int_list,
        metavar="LIST",
        help="comma-separated integers, e.g. -2,2,-3",
    )
    p.set_defaults(func=_cmd_conway)

    p = sub.add_parser("lens-eq", help="decide whether L(p1,q1) and L(p2,q2) agree")
    p.add_argument("p1", type=int)
    p.add_argument("q1", type=int)
    p.add_argument("p2", type=int)
    p.add_argument("q2", type=int)
    p.add_argument(
        "--unoriented",
        action="store_true",
        help="also accept orientation-reversing homeomorphisms",
    )
    p.set_defaults(func=_cmd_lens_eq)

    p = sub.add_parser(
        "verify-paper",
        help="run the built-in case-analysis and exceptional-knot checks",
    )
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    # The Conway tuple may itself start with "-"; a "--" separator keeps
    # argparse from reading it as an option.
    if args and args[0] == "conway" and "-h" not in args and "--help" not in args:
        args.insert(1, "--")
    ns = _build_parser().parse_args(args)
    try:
        return ns.func(ns)
    except (
        BraidParseError,
        DegenerateNotationError,
        NotTwoBridgeLinkError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    app()
