"""Command line interface.

    seifert-obstruct check <knotspec> [--unique-surface] [--format json|text]
    seifert-obstruct table [--format json|text]
    seifert-obstruct certificate chain <a> <b>
    seifert-obstruct certificate pair <b>
    seifert-obstruct congruent <a> <b> <c>

Exit status is 0 on success and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import KnotSpecError, parse_knotspec
from .pipeline import analyze, run_table_screen
from .sequiv import (
    congruence_classifier_2x2,
    construct_sequiv_pair,
    lemma_chain_certificate,
    shift_matrix,
)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-obstruct",
        description="Cosmetic crossing obstructions for genus-one knots from Seifert matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="analyze one knot")
    check.add_argument("spec", nargs="+",
                       help="'matrix a,b;c,d' | 'pretzel p,q,r' | 'whitehead +|- n' | 'catalog NAME'")
    check.add_argument("--unique-surface", action="store_true",
                       help="assert the knot has a unique minimal genus Seifert surface")
    check.add_argument("--format", choices=("json", "text"), default="text")

    table = sub.add_parser("table", help="screen the genus-one knots with at most 12 crossings")
    table.add_argument("--format", choices=("json", "text"), default="text")

    cert = sub.add_parser("certificate", help="emit an S-equivalence certificate")
    cert_sub = cert.add_subparsers(dest="which", required=True)
    chain = cert_sub.add_parser("chain", help="((a,b),(b+1,0)) ~ ((ab^2,b),(b+1,0))")
    chain.add_argument("a", type=int)
    chain.add_argument("b", type=int)
    pair = cert_sub.add_parser("pair", help="S-equivalent but non-congruent pair for b")
    pair.add_argument("b", type=int)

    cong = sub.add_parser("congruent", help="is ((a,b),(b+1,0)) congruent to ((c,b),(b+1,0))?")
    cong.add_argument("a", type=int)
    cong.add_argument("b", type=int)
    cong.add_argument("c", type=int)
    return parser


def _run(args) -> str:
    if args.command == "check":
        report = analyze(parse_knotspec(" ".join(args.spec)), unique_surface=args.unique_surface)
        return report.to_json() if args.format == "json" else report.to_text()
    if args.command == "table":
        screen = run_table_screen()
        return json.dumps(screen.to_dict(), indent=2, ensure_ascii=False) if args.format == "json" else screen.to_text()
    if args.command == "certificate":
        if args.which == "chain":
            cert = lemma_chain_certificate(args.a, args.b)
            header = f"# ((a,b),(b+1,0)) ~ ((ab^2,b),(b+1,0)) with a={args.a} b={args.b}\n"
        else:
            pair = construct_sequiv_pair(args.b)
            cert = pair.certificate
            header = (f"# a={pair.a} b={pair.b} k={pair.k}: a+1 = a*b^2 + k*(2b+1)\n"
                      f"# ((a,b),(b+1,0)) ~ ((a+1,b),(b+1,0)), not congruent\n")
        return header + cert.dumps().rstrip("\n")
    if args.command == "congruent":
        n = congruence_classifier_2x2(args.a, args.b, args.c)
        if n is None:
            return "not congruent"
        return f"congruent: n={n} witness P={shift_matrix(n)}"
    raise AssertionError(args.command)


def _join_spec(argv: list[str]) -> list[str]:
    """Merge the knot-spec words after ``check`` into one argument.

    Specs such as ``pretzel -5,3,-3`` contain words that argparse would
    otherwise read as options.
    """
    if not argv or argv[0] != "check":
        return argv
    words, opts = [], []
    rest = iter(argv[1:])
    for tok in rest:
        if tok in ("--format",):
            opts += [tok, next(rest, "")]
        elif tok.startswith("--format=") or tok in ("--unique-surface", "-h", "--help"):
            opts.append(tok)
        else:
            words.append(tok)
    return ["check", *opts] + ([" ".join(words)] if words else [])


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _parser().parse_args(_join_spec(argv))
    try:
        print(_run(args))
    except (KnotSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
