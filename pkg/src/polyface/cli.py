"""Command-line interface: ``polyface {gen|census|oracle|verify|bijection|dot}``.

Exit codes: 0 clean, 1 property violation or census/oracle mismatch,
2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import generate
from .bijection import verify_bijection
from .poset import PosetError
from .serialize import (
    c_square_json,
    census_report,
    dumps,
    o_square_json,
    oracle_report,
    poset_to_json,
    read_posets,
    to_dot,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _read_input(path: str) -> list:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return list(read_posets(text))


def _polytopes(choice: str) -> tuple[str, ...]:
    return ("O", "C") if choice == "both" else (choice,)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "named":
        posets = [generate.named_poset(args.name, args.k)]
    elif args.kind == "random":
        posets = [generate.random_poset(args.n, args.density, args.seed)]
    else:
        posets = generate.all_posets(args.n)
    for P in posets:
        print(dumps(poset_to_json(P)))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for P in _read_input(args.input):
        for pt in _polytopes(args.polytope):
            rep = census_report(P, pt)
            if args.oracle:
                orc = oracle_report(P, pt)
                keys = ("f0", "f1", "f2_tri", "f2_sq")
                rep["oracle"] = {k: orc[k] for k in keys}
                rep["match"] = all(rep[k] == orc[k] for k in keys)
                if not rep["match"]:
                    status = EXIT_VIOLATION
            print(dumps(rep))
    return status


def cmd_oracle(args: argparse.Namespace) -> int:
    for P in _read_input(args.input):
        for pt in _polytopes(args.polytope):
            print(dumps(oracle_report(P, pt)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import run_verification

    report = run_verification(args.max_n, args.oracle_max_n, args.jobs)
    out = report.to_json()
    if args.figures:
        from .plotting import write_figures

        out["figures"] = write_figures(report, args.figures)
    print(dumps(out))
    return EXIT_OK if report.clean else EXIT_VIOLATION


def cmd_bijection(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for P in _read_input(args.input):
        rep = verify_bijection(P)
        print(
            dumps(
                {
                    "poset": poset_to_json(P),
                    "count_O": rep.count_O,
                    "count_C": rep.count_C,
                    "roundtrip_failures": rep.roundtrip_failures,
                    "pairs": [{"o_square": o_square_json(s), "c_square": c_square_json(t)} for s, t in rep.pairs],
                }
            )
        )
        if not rep.ok:
            status = EXIT_VIOLATION
    return status


def cmd_dot(args: argparse.Namespace) -> int:
    for i, P in enumerate(_read_input(args.input)):
        sys.stdout.write(to_dot(P, f"P{i}" if i else "P"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyface", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit posets as JSON")
    gsub = gen.add_subparsers(dest="kind", required=True)
    named = gsub.add_parser("named")
    named.add_argument("name", choices=generate.NAMED)
    named.add_argument("k", nargs="?", type=int)
    rnd = gsub.add_parser("random")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--density", type=float, default=0.3)
    rnd.add_argument("--seed", type=int, default=0)
    allp = gsub.add_parser("all")
    allp.add_argument("--n", type=int, required=True)
    gen.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("census", cmd_census, "combinatorial face census"),
        ("oracle", cmd_oracle, "geometric face census from the facet inequalities"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", default="-", help="poset JSON file, '-' for stdin")
        p.add_argument("--polytope", choices=("O", "C", "both"), default="both")
        if name == "census":
            p.add_argument("--oracle", action="store_true", help="cross-check against the oracle")
        p.set_defaults(func=func)

    ver = sub.add_parser("verify", help="check the face-count identities over all posets")
    ver.add_argument("--max-n", type=int, default=5)
    ver.add_argument("--oracle-max-n", type=int, default=5)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--figures", metavar="DIR", help="write summary figures to DIR")
    ver.set_defaults(func=cmd_verify)

    for name, func in (("bijection", cmd_bijection), ("dot", cmd_dot)):
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (PosetError, OSError) as exc:
        print(f"polyface: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
