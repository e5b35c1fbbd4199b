"""Command-line front end.

Subcommands: coeff, triangle, twisted, necklaces, verify; text, JSON, and
CSV output where it makes sense.  Exit codes: 0 success / full agreement,
1 closed-vs-oracle divergence, 2 usage or enumeration-limit errors.  The
base field never enters the numbers, so --q only checks that the field
order is odd.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .coefficients import (
    EnrichedCoefficient,
    triangle,
    triangle_to_json,
    twisted_closed,
    twisted_oracle,
    untwisted_closed,
    untwisted_oracle,
    verify,
)
from .necklaces import EnumerationLimitError, orbit_catalog

FORMATS = ("text", "json", "csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwbinom",
        description=(
            "Enriched binomial coefficients over finite fields of odd"
            " characteristic, with necklace-orbit cross-validation."
        ),
    )
    parser.add_argument(
        "--q",
        type=int,
        help="order of the base field; validated to be odd, nothing else"
        " (the values are the same for every odd q)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one enriched coefficient")
    p.add_argument("--n", type=int, help="bead count (defaults to 2j when --twisted)")
    p.add_argument("--j", type=int, required=True, help="blue bead count")
    p.add_argument("--twisted", action="store_true", help="twisted coefficient (n = 2j)")
    p.add_argument("--oracle", action="store_true", help="also run the enumeration oracle")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("triangle", help="rows of the enriched triangle")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("twisted", help="the twisted coefficient sequence")
    p.add_argument("--max-j", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the enumeration oracle")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("necklaces", help="rotation-orbit catalog for (n, j)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--classify", action="store_true",
                   help="add the type-1/type-2/odd flip-fixed summary (even n only)")
    p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("verify", help="closed-form vs oracle sweep")
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--twisted-max-j", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _coeff_row(c: EnrichedCoefficient) -> list:
    return [c.n, c.j, c.twisted, c.method, c.value.rank, c.value.disc_name, c.display]


def _cmd_coeff(args) -> int:
    if args.twisted:
        if args.n is not None and args.n != 2 * args.j:
            raise ValueError(f"--twisted requires n = 2j, got n={args.n}, j={args.j}")
        closed = twisted_closed(args.j)
        oracle = twisted_oracle(args.j) if args.oracle else None
    else:
        if args.n is None:
            raise ValueError("--n is required unless --twisted is given")
        closed = untwisted_closed(args.n, args.j)
        oracle = untwisted_oracle(args.n, args.j) if args.oracle else None

    if args.format == "json":
        out = {"value": closed.to_json()}
        if oracle is not None:
            out["oracle"] = oracle.to_json()
            out["agree"] = closed.value == oracle.value
        _print_json(out)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "j", "twisted", "method", "rank", "disc", "display"])
        w.writerow(_coeff_row(closed))
        if oracle is not None:
            w.writerow(_coeff_row(oracle))
    else:
        print(closed.display)
        print(f"rank={closed.value.rank} disc={closed.value.disc_name}")
        if oracle is not None:
            agree = "yes" if closed.value == oracle.value else "NO"
            print(f"oracle={oracle.display} agree={agree}")
    if oracle is not None and closed.value != oracle.value:
        return 1
    return 0


def triangle_text(table: list[list[EnrichedCoefficient]]) -> str:
    """Centered text triangle; entries joined by double spaces."""
    lines = ["  ".join(c.display for c in row) for row in table]
    width = len(lines[-1])
    return "\n".join(line.center(width).rstrip() for line in lines)


def _cmd_triangle(args) -> int:
    table = triangle(args.rows)
    if args.format == "json":
        _print_json(triangle_to_json(table))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["row", "j", "rank", "disc", "display"])
        for row in table:
            for c in row:
                w.writerow([c.n, c.j, c.value.rank, c.value.disc_name, c.display])
    else:
        print(triangle_text(table))
    return 0


def _cmd_twisted(args) -> int:
    if args.max_j < 1:
        raise ValueError(f"--max-j must be positive, got {args.max_j}")
    cells = [twisted_closed(j) for j in range(1, args.max_j + 1)]
    oracles = [twisted_oracle(j) for j in range(1, args.max_j + 1)] if args.oracle else None
    diverged = False
    if args.format == "json":
        out = {"max_j": args.max_j, "sequence": [c.to_json() for c in cells]}
        if oracles is not None:
            out["oracle"] = [c.to_json() for c in oracles]
            out["agree"] = all(a.value == b.value for a, b in zip(cells, oracles))
            diverged = not out["agree"]
        _print_json(out)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["j", "rank", "disc", "display"])
        for c in cells:
            w.writerow([c.j, c.value.rank, c.value.disc_name, c.display])
        if oracles is not None:
            diverged = any(a.value != b.value for a, b in zip(cells, oracles))
    else:
        for c in cells:
            line = f"{c.j}\t{c.display}"
            if oracles is not None:
                o = oracles[c.j - 1]
                agree = "yes" if o.value == c.value else "NO"
                line += f"\toracle={o.display} agree={agree}"
                diverged = diverged or o.value != c.value
            print(line)
    return 1 if diverged else 0


def _cmd_necklaces(args) -> int:
    catalog = orbit_catalog(args.n, args.j, classify=args.classify)
    if args.format == "json":
        _print_json(catalog)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "j", "canonical", "period", "flip_fixed", "axes"])
        for orbit in catalog["orbits"]:
            axes = "|".join(f"{a['m']}:{a['type']}" for a in orbit["axes"])
            w.writerow([args.n, args.j, orbit["canonical"], orbit["period"],
                        orbit["flip_fixed"], axes])
    else:
        print(f"orbits of (n={args.n}, j={args.j}): {len(catalog['orbits'])}")
        for orbit in catalog["orbits"]:
            axes = ",".join(f"m={a['m']}:type{a['type']}" for a in orbit["axes"]) or "-"
            print(
                f"  {orbit['canonical']}  period={orbit['period']}"
                f"  flip_fixed={'yes' if orbit['flip_fixed'] else 'no'}  axes={axes}"
            )
        if "classification" in catalog:
            c = catalog["classification"]
            print(
                f"flip-fixed summary: type1_even={c['type1_even']}"
                f" type2_even={c['type2_even']} odd_fixed={c['odd_fixed']}"
            )
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.max_n, args.twisted_max_j, jobs=max(1, args.jobs))
    if args.format == "json":
        _print_json(report.to_json())
    else:
        print(report.render_text())
    return 0 if report.ok else 1


_COMMANDS = {
    "coeff": _cmd_coeff,
    "triangle": _cmd_triangle,
    "twisted": _cmd_twisted,
    "necklaces": _cmd_necklaces,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    if args.q is not None and args.q % 2 == 0:
        print(f"error: --q must be odd, got {args.q}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
