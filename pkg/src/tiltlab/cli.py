"""``tiltlab`` command line.

Exit codes: 0 success, 1 verification/internal failure, 2 usage or input error.
Machine output is JSON (``--json PATH``); standard output gets a short
human-readable summary.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import exactfield as ef
from .bijectlab import (
    SET_NAMES,
    enumerate_set,
    is_sincere,
    jsonable_sets,
    opposite_census,
    support_rank,
    support_tilting_census,
    verify_bijections,
)
from .census import build_census
from .quiverroots import InvalidQuiverError, Quiver, family_quiver, validate

log = logging.getLogger("tiltlab")

TABLE_BUDGET = {"A": 6, "D": 5}
SET_BY_NAME = {v: k for k, v in SET_NAMES.items()}


class UsageError(Exception):
    pass


def _load_quiver(args) -> Quiver:
    if bool(args.family) == bool(args.quiver):
        raise UsageError("give exactly one of --family or --quiver")
    if args.family:
        q = family_quiver(args.family)
    else:
        try:
            text = Path(args.quiver).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.quiver}: {exc}") from None
        q = Quiver.from_json(text)
    validate(q)
    return q


def _write_json(path: str | None, payload: dict):
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _check_p(p: int):
    if not ef.is_prime(p):
        raise UsageError(f"--p {p} is not prime")


def cmd_census(args) -> int:
    q = _load_quiver(args)
    c = build_census(q, args.p)
    print(f"{len(c)} indecomposables over F_{args.p}")
    for i, r in enumerate(c.roots):
        print(f"  [{i}] {list(r)}")
    print("Hom:")
    for row in c.hom_table:
        print("  " + " ".join(str(x) for x in row))
    print("Ext:")
    for row in c.ext_table:
        print("  " + " ".join(str(x) for x in row))
    _write_json(args.json, c.to_json())
    return 0


def cmd_enumerate(args) -> int:
    q = _load_quiver(args)
    c = build_census(q, args.p)
    which = SET_BY_NAME[args.set]
    entries = enumerate_set(c, which)
    if args.sincere:
        entries = [s for s in entries if is_sincere(c, s)]
    print(f"{args.set}: {len(entries)} entries")
    _write_json(
        args.json,
        {
            "quiver": q.to_json(),
            "p": args.p,
            "set": args.set,
            "sincere": args.sincere,
            "roots": [list(r) for r in c.roots],
            "entries": jsonable_sets(entries),
        },
    )
    return 0


def cmd_verify(args) -> int:
    q = _load_quiver(args)
    c = build_census(q, args.p)
    report = verify_bijections(c, opposite_census(c), oracle=args.oracle == "on", max_dim=args.max_dim)
    counts = " ".join(str(v) for v in report["counts"].values())
    print(f"counts: {counts}  (root poset: {report['root_poset_antichains']})")
    for rt in report["roundtrips"]:
        print(f"  [{'pass' if rt['pass'] else 'FAIL'}] {rt['name']}")
    print("PASS" if report["passed"] else "FAIL")
    _write_json(args.json, report)
    return 0 if report["passed"] else 1


def support_tilting_table(kind: str, max_n: int, p: int = 2) -> dict[int, list[int]]:
    """Support-tilting counts by support-rank, linear orientation, n up to ``max_n``."""
    start = 4 if kind == "D" else 1
    rows = {}
    for n in range(start, max_n + 1):
        c = build_census(family_quiver(f"{kind}{n}"), p)
        row = [0] * (n + 1)
        for t in support_tilting_census(c):
            row[support_rank(c, t)] += 1
        rows[n] = row
    return rows


def cmd_table(args) -> int:
    kind = args.family.upper()
    if kind not in TABLE_BUDGET:
        raise UsageError("table supports families A and D")
    if args.max_n > TABLE_BUDGET[kind]:
        raise UsageError(f"--max-n {args.max_n} exceeds the {kind} budget {TABLE_BUDGET[kind]}")
    rows = support_tilting_table(kind, args.max_n, args.p)
    for n, row in rows.items():
        print(f"{kind}{n}: " + " ".join(str(x) for x in row) + f"  | {sum(row)}")
    _write_json(
        args.json,
        {"family": kind, "p": args.p, "rows": {str(n): row for n, row in rows.items()},
         "totals": {str(n): sum(row) for n, row in rows.items()}},
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, quiver=True):
        if quiver:
            sp.add_argument("--family", help="built-in tag, e.g. A3 or D4:><>")
            sp.add_argument("--quiver", help="quiver JSON file")
        sp.add_argument("--p", type=int, default=2, help="prime field size (default 2)")
        sp.add_argument("--json", help="write machine-readable output here")
        sp.add_argument("--max-dim", type=int, default=8, help="subrepresentation enumeration bound")

    sp = sub.add_parser("census", help="list indecomposables and Hom/Ext tables")
    common(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("enumerate", help="enumerate one of the seven sets")
    common(sp)
    sp.add_argument("--set", required=True, choices=list(SET_BY_NAME))
    sp.add_argument("--sincere", action="store_true", help="keep only entries with full support")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check all bijections, roundtrips and oracles")
    common(sp)
    sp.add_argument("--oracle", choices=["on", "off"], default="on")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="support-tilting counts by support-rank")
    common(sp, quiver=False)
    sp.add_argument("--family", required=True, help="A or D")
    sp.add_argument("--max-n", type=int, default=3)
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        _check_p(args.p)
        return args.func(args)
    except InvalidQuiverError as exc:
        print(json.dumps(exc.diagnostic), file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"tiltlab: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        log.error("internal failure: %s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
