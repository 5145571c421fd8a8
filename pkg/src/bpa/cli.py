"""Command-line front end.

Exit status: 0 on success, 1 when a verification or comparison fails (or a
cache/network operation fails), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import counting, enumeration, identities, oeis, series
from .counting import Kind

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _index(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _kind(args) -> Kind:
    return Kind.RESTRICTED if args.restricted else Kind.BARRED


def _render_table(table: counting.CountTable, fmt: str) -> str:
    if fmt == "csv":
        lines = ["n\\m," + ",".join(str(m) for m in range(table.m_max + 1))]
        lines += [f"{n}," + ",".join(map(str, row)) for n, row in table.rows()]
        return "\n".join(lines) + "\n"
    if fmt == "json-lines":
        return "".join(
            json.dumps({"n": n, "m": m, "value": v}) + "\n"
            for n, row in table.rows()
            for m, v in enumerate(row)
        )
    cells = [["n\\m"] + [str(m) for m in range(table.m_max + 1)]]
    cells += [[str(n)] + [str(v) for v in row] for n, row in table.rows()]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def cmd_count(args) -> int:
    fn = counting.restricted_count if args.restricted else counting.barred_count
    print(fn(args.n, args.m))
    return EXIT_OK


def cmd_table(args) -> int:
    table = counting.build_table(args.n_max, args.m_max, _kind(args))
    sys.stdout.write(_render_table(table, args.format))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    limit = None if args.allow_large else enumeration.SAFETY_LIMIT
    if limit is not None and args.n > limit and args.limit is None:
        raise enumeration.LimitExceeded(
            f"n={args.n} exceeds the safety limit {limit}; pass --allow-large or --limit"
        )
    if args.restricted:
        stream = enumeration.enum_restricted(args.n, args.m)
    else:
        stream = enumeration.enum_barred(args.n, args.m)
    out = sys.stdout
    for i, arrangement in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            out.write("# truncated\n")
            break
        out.write(enumeration.canonical_render(arrangement) + "\n")
    return EXIT_OK


def cmd_series(args) -> int:
    if args.m == 0:
        res = series.fubini_series(args.n)
    else:
        res = series.barred_series(args.n, args.m)
    print(f"value {res.rounded}")
    print(f"terms_used {res.terms_used}")
    print(f"partial_sum {res.partial_sum}")
    print(f"tail_bound {res.tail_bound}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = identities.verify_all(args.n_max, args.m_max, jobs=args.jobs)
    if args.format == "json-lines":
        sys.stdout.write(report.render_jsonl())
        print(report.summary(), file=sys.stderr)
    else:
        sys.stdout.write(report.render_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oeis_check(args) -> int:
    remote = oeis.fetch_bfile(args.id, offline=args.offline, fixtures=args.fixtures)
    fn = counting.restricted_count if args.restricted else counting.barred_count
    start = max(remote.offset, 0)
    stop = remote.indices.stop
    local = oeis.Sequence("local", start, tuple(fn(n, args.m) for n in range(start, stop)))
    rep = oeis.compare(local, remote)
    print(f"{args.id}: {rep.verdict}, {rep.compared} terms compared")
    if rep.first_mismatch:
        i, lv, rv = rep.first_mismatch
        print(f"first mismatch at index {i}: local {lv}, remote {rv}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_cache(args) -> int:
    if args.save:
        table = counting.build_table(args.n_max, args.m_max, _kind(args))
        counting.save_cache(table, args.save)
        print(f"saved {table.kind.value} table n<={table.n_max} m<={table.m_max} to {args.save}")
    else:
        table = counting.load_cache(args.load)
        sys.stdout.write(_render_table(table, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bpa", description="Count, enumerate and verify barred preferential arrangements."
    )
    sub = p.add_subparsers(dest="command", required=True)

    def restricted_flag(sp):
        sp.add_argument("--restricted", action="store_true",
                        help="restricted arrangements (last section free, others at most one block)")

    sp = sub.add_parser("count", help="exact count for one (n, m)")
    sp.add_argument("--n", type=_index, required=True)
    sp.add_argument("--m", type=_index, default=0)
    restricted_flag(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="table of counts for n <= n-max, m <= m-max")
    sp.add_argument("--n-max", type=_index, required=True)
    sp.add_argument("--m-max", type=_index, required=True)
    sp.add_argument("--format", choices=["text", "csv", "json-lines"], default="text")
    restricted_flag(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate", help="list every arrangement, one per line")
    sp.add_argument("--n", type=_index, required=True)
    sp.add_argument("--m", type=_index, default=0)
    sp.add_argument("--limit", type=_index, help="stop after this many lines")
    sp.add_argument("--allow-large", action="store_true",
                    help=f"allow n above the safety limit ({enumeration.SAFETY_LIMIT})")
    restricted_flag(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("series", help="evaluate the infinite series with a certified tail")
    sp.add_argument("--n", type=_index, required=True)
    sp.add_argument("--m", type=_index, default=0)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", help="check all identities on a grid")
    sp.add_argument("--n-max", type=_index, default=8)
    sp.add_argument("--m-max", type=_index, default=5)
    sp.add_argument("--format", choices=["text", "json-lines"], default="text")
    sp.add_argument("--jobs", type=_index, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oeis-check", help="compare a computed column with an OEIS b-file")
    sp.add_argument("--id", default="A000670")
    sp.add_argument("--m", type=_index, default=0, help="bar count of the local column")
    sp.add_argument("--offline", action="store_true", help="use fixtures, never the network")
    sp.add_argument("--fixtures", help=f"fixture directory (default ${oeis.FIXTURES_ENV} or bundled)")
    restricted_flag(sp)
    sp.set_defaults(func=cmd_oeis_check)

    sp = sub.add_parser("cache", help="save or load a count table cache file")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--save", metavar="PATH")
    grp.add_argument("--load", metavar="PATH")
    sp.add_argument("--n-max", type=_index, default=10)
    sp.add_argument("--m-max", type=_index, default=5)
    sp.add_argument("--format", choices=["text", "csv", "json-lines"], default="text")
    restricted_flag(sp)
    sp.set_defaults(func=cmd_cache)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (counting.MalformedCache, oeis.BFileParseError, oeis.NotFound, OSError) as exc:
        print(f"bpa: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:  # LimitExceeded, bad OEIS id
        print(f"bpa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
