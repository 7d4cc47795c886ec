"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
JSON output is byte-identical across runs and across ``--jobs`` settings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .hook_rule import (
    DecompositionTable,
    decompose_tensor_exterior,
    decompose_tensor_hook,
    pw_set,
)
from .lr import lr_coefficient
from .pictures import (
    picture_bump_destination,
    picture_from_json,
    picture_to_json,
    render_picture,
)
from .shapes import format_cell, format_partition, parse_cell, parse_partition
from .tableaux import render_tableau, tableau_from_json
from .verify import verify_range


def _print_table(table: DecompositionTable, fmt: str, with_hook: bool) -> None:
    if fmt == "json":
        print(json.dumps(table.to_json(), separators=(",", ":")))
        return
    if fmt == "tsv":
        columns = ["mu", "ph", "pw", "by_zeta"] if with_hook else ["mu", "pw", "by_zeta"]
        print("\t".join(columns))
        for row in table.rows:
            blob = json.dumps(
                [
                    {"zeta": list(zc.zeta)}
                    | ({"ph": zc.ph} if zc.ph is not None else {})
                    | {"pw": zc.pw}
                    for zc in row.by_zeta
                ],
                separators=(",", ":"),
            )
            fields = [format_partition(row.mu)]
            if with_hook:
                fields.append(str(row.ph))
            fields.extend([str(row.pw), blob])
            print("\t".join(fields))
        return
    for row in table.rows:
        if with_hook:
            print(f"{format_partition(row.mu)} -> ph={row.ph} pw={row.pw}")
        else:
            print(f"{format_partition(row.mu)} -> pw={row.pw}")


def cmd_decompose(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    table = decompose_tensor_hook(lam, args.m, jobs=args.jobs)
    _print_table(table, args.format, with_hook=True)
    return 0


def cmd_exterior(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    table = decompose_tensor_exterior(lam, args.m, jobs=args.jobs)
    _print_table(table, args.format, with_hook=False)
    return 0


def cmd_pictures(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    zeta = parse_partition(args.zeta)
    bump_at = parse_cell(args.bump) if args.bump else None
    for k, tp in enumerate(pw_set(lam, mu, zeta)):
        route = None
        destination = None
        if bump_at is not None:
            destination, route = picture_bump_destination(tp.picture, bump_at)
        if args.format == "json":
            obj = picture_to_json(tp.picture)
            if route is not None:
                obj["bump"] = {
                    "at": list(bump_at),
                    "destination": list(destination),
                    "route": [list(cell) for cell in route.cells],
                }
            print(json.dumps(obj, separators=(",", ":")))
        else:
            print(f"# picture {k + 1}")
            print(render_picture(tp.picture, route))
            if route is not None:
                print(
                    f"# bump {format_cell(bump_at)}: destination "
                    f"{format_cell(destination)}"
                )
            print()
    return 0


def cmd_lr(args: argparse.Namespace) -> int:
    value = lr_coefficient(
        parse_partition(args.lam), parse_partition(args.zeta), parse_partition(args.xi)
    )
    print(value)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cache = args.cache or os.environ.get("HOOKKRON_CACHE") or None
    n_min = args.n_min if args.n_min is not None else args.n
    report = verify_range(n_min, args.n, jobs=args.jobs, cache=cache)
    for mismatch in report.mismatches:
        print(str(mismatch))
    print(report.summary())
    return 0 if report.ok else 1


def cmd_render(args: argparse.Namespace) -> int:
    if args.infile and args.infile != "-":
        with open(args.infile, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    obj = json.loads(text)
    if "entries" in obj:
        print(render_tableau(tableau_from_json(obj)))
    elif "map" in obj:
        print(render_picture(picture_from_json(obj)))
    else:
        raise ValueError("input JSON is neither a tableau nor a picture")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookkron",
        description="Tensor multiplicities for symmetric groups with a hook factor",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    decompose = sub.add_parser("decompose", help="decompose lambda tensor the hook of leg m")
    decompose.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    decompose.add_argument("--m", type=int, required=True)
    decompose.add_argument("--format", choices=("json", "tsv", "ascii"), default="ascii")
    decompose.add_argument("--jobs", type=int, default=1)
    decompose.set_defaults(func=cmd_decompose)

    exterior = sub.add_parser(
        "exterior", help="decompose lambda tensor the m-th exterior power"
    )
    exterior.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    exterior.add_argument("--m", type=int, required=True)
    exterior.add_argument("--format", choices=("json", "tsv", "ascii"), default="ascii")
    exterior.add_argument("--jobs", type=int, default=1)
    exterior.set_defaults(func=cmd_exterior)

    pictures = sub.add_parser("pictures", help="enumerate pictures of one overlap")
    pictures.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    pictures.add_argument("--mu", required=True, metavar="PARTS")
    pictures.add_argument("--zeta", required=True, metavar="PARTS")
    pictures.add_argument("--format", choices=("json", "ascii"), default="ascii")
    pictures.add_argument(
        "--bump", metavar="CELL", help="overlay the bumping route for this target cocorner"
    )
    pictures.set_defaults(func=cmd_pictures)

    lr = sub.add_parser("lr", help="one Littlewood-Richardson coefficient")
    lr.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    lr.add_argument("--zeta", required=True, metavar="PARTS")
    lr.add_argument("--xi", required=True, metavar="PARTS")
    lr.set_defaults(func=cmd_lr)

    verify = sub.add_parser("verify", help="sweep picture counts against the character oracle")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--n-min", type=int, default=None, dest="n_min")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--cache", default=None, help="character table cache file")
    verify.set_defaults(func=cmd_verify)

    render = sub.add_parser("render", help="pretty-print a tableau or picture from JSON")
    render.add_argument("--in", dest="infile", default="-", metavar="PATH")
    render.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
