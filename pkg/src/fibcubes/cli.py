"""Command-line interface.

Subcommands:

* ``table``  -- render count/sequence tables (tsv, csv, json)
* ``cube``   -- export an inclusion diagram (dot, json, edgelist)
* ``graph``  -- export a path/cycle power (edgelist, dot)
* ``count``  -- print one exact count, selectable computation route
* ``seq``    -- dump a delayed Fibonacci/Lucas sequence
* ``verify`` -- run the identity cross-check suite

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity
error.  All numeric output is full decimal, never scientific notation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, cube, enumeration, verify
from .counting import (
    cycle_count,
    cycle_count_k,
    cycle_count_rec,
    cycle_edges,
    cycle_edges_conv,
    extended_fib,
    extended_lucas,
    h_fibonacci,
    h_lucas,
    max_subset_size,
    path_count,
    path_count_k,
    path_count_rec,
    path_edges,
    path_edges_conv,
)
from .enumeration import DEFAULT_CAP, CapacityError
from .graphs import CYCLE, PATH, GapGraph, edgelist_text, graph_dot

__all__ = ["main", "script", "PAPER_TABLE_LAYOUTS"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

# Extents of the published reference tables that --paper-layout reproduces.
# Per-size tables exist for h = 1, 2, 3 and map h -> (n_max, k_max); the
# h-by-n sweep tables map to (first n, last n) with h always 0..10.
PAPER_TABLE_LAYOUTS = {
    "pk": {1: (15, 8), 2: (16, 6), 3: (17, 5)},
    "ck": {1: (16, 8), 2: (17, 5), 3: (18, 4)},
    "p": (0, 13),
    "F": (1, 15),
    "H": (0, 13),
    "c": (0, 16),
    "L": (1, 15),
    "M": (0, 15),
}
PAPER_H_RANGE = (0, 10)

_PER_SIZE_TABLES = ("pk", "ck")


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_h_range(text: str) -> tuple[int, int]:
    """Parse "2" or "0:10" into an inclusive (lo, hi) range."""
    lo, _, hi = text.partition(":")
    a = int(lo)
    b = int(hi) if hi else a
    if a < 0 or b < a:
        raise ValueError(f"bad h range {text!r}")
    return a, b


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _grid_lines(row_tag: str, rows, col_tag: str, cols, cell) -> list[list[str]]:
    header = [""] + [f"{col_tag}={cols[0]}"] + [str(c) for c in cols[1:]]
    lines = [header]
    for ridx, r in enumerate(rows):
        label = f"{row_tag}={r}" if ridx == 0 else str(r)
        lines.append([label] + [str(cell(r, c)) for c in cols])
    return lines


def _render_grid(lines: list[list[str]], fmt: str, row_tag: str, rows,
                 col_tag: str, cols) -> str:
    if fmt == "tsv":
        return "".join("\t".join(row) + "\n" for row in lines)
    if fmt == "csv":
        return "".join(",".join(row) + "\n" for row in lines)
    payload = {
        "row": row_tag,
        "rows": list(rows),
        "col": col_tag,
        "cols": list(cols),
        "values": [[int(v) for v in row[1:]] for row in lines[1:]],
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_table(args) -> int:
    which = args.which
    fmt = args.format
    per_size = which in _PER_SIZE_TABLES
    if args.paper_layout:
        if args.n_max is not None or args.k_max is not None:
            return _usage("--paper-layout fixes the extents; drop --n-max/--k-max")
        if per_size:
            if args.h is None:
                return _usage(f"table {which} needs --h")
            try:
                lo, hi = _parse_h_range(args.h)
            except ValueError as exc:
                return _usage(str(exc))
            layouts = PAPER_TABLE_LAYOUTS[which]
            if lo != hi or lo not in layouts:
                return _usage(
                    f"--paper-layout for {which} exists only for --h in {sorted(layouts)}")
            h = lo
            n_max, k_max = layouts[h]
            n_min = 0
        else:
            if args.h is not None:
                return _usage("--paper-layout fixes the h range; drop --h")
            n_min, n_max = PAPER_TABLE_LAYOUTS[which]
            h_lo, h_hi = PAPER_H_RANGE
    else:
        if per_size:
            if args.h is None:
                return _usage(f"table {which} needs --h")
            try:
                lo, hi = _parse_h_range(args.h)
            except ValueError as exc:
                return _usage(str(exc))
            if lo != hi:
                return _usage(f"table {which} needs a single --h, not a range")
            h = lo
            n_min = 0
            n_max = args.n_max if args.n_max is not None else 15
            k_max = args.k_max if args.k_max is not None else max_subset_size(n_max, h)
        else:
            if args.k_max is not None:
                return _usage(f"table {which} has no k axis")
            try:
                h_lo, h_hi = _parse_h_range(args.h) if args.h is not None else (0, 10)
            except ValueError as exc:
                return _usage(str(exc))
            n_min = 1 if which in ("F", "L") else 0
            n_max = args.n_max if args.n_max is not None else 15

    cols = list(range(n_min, n_max + 1))
    if not cols:
        return _usage(f"empty column range: n runs {n_min}..{n_max}")
    if per_size:
        rows = list(range(k_max + 1))
        if which == "pk":
            cell = lambda k, n: path_count_k(n, h, k)
        else:
            cell = lambda k, n: cycle_count_k(n, h, k)
        lines = _grid_lines("k", rows, "n", cols, cell)
        text = _render_grid(lines, fmt, "k", rows, "n", cols)
    else:
        rows = list(range(h_lo, h_hi + 1))
        paper = args.paper_layout
        cells = {
            "p": lambda hh, n: path_count(n, hh),
            "c": lambda hh, n: cycle_count(n, hh),
            "F": lambda hh, n: h_fibonacci(hh, n),
            "L": lambda hh, n: h_lucas(hh, n),
            "H": lambda hh, n: path_edges(n, hh),
            # The published edge table prints 0 in the n <= h corner it makes
            # no claim about; the library value there is cycle_edges itself.
            "M": lambda hh, n: 0 if paper and n <= hh else cycle_edges(n, hh),
        }
        lines = _grid_lines("h", rows, "n", cols, cells[which])
        text = _render_grid(lines, fmt, "h", rows, "n", cols)

    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# cube / graph
# ---------------------------------------------------------------------------

def _cmd_cube(args) -> int:
    if args.n < 0 or args.h < 0:
        return _usage("n and h must be nonnegative")
    g = GapGraph(args.kind, args.n, args.h)
    try:
        c = cube.build_cube(g, cap=args.cap)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if args.format == "dot":
        text = c.to_dot()
    elif args.format == "json":
        text = c.to_json()
    else:
        text = c.to_edgelist_text()
    _emit(text, args.out)
    print(f"{c.vertex_count} vertices, {c.cover_count} edges", file=sys.stderr)
    return EXIT_OK


def _cmd_graph(args) -> int:
    if args.n < 0 or args.h < 0:
        return _usage("n and h must be nonnegative")
    g = GapGraph(args.kind, args.n, args.h)
    text = edgelist_text(g) if args.format == "edgelist" else graph_dot(g)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _oracle_set_count(kind: str, n: int, h: int, k: int | None, cap: int) -> int:
    masks = enumeration.iter_masks(GapGraph(kind, n, h), cap=cap)
    if k is None:
        return len(masks)
    return sum(1 for m in masks if m.bit_count() == k)


def _cmd_count(args) -> int:
    n, h, k = args.n, args.h, args.k
    if n < 0 or h < 0:
        return _usage("n and h must be nonnegative")
    route = args.route
    quantity = args.quantity
    edge_quantity = quantity in ("path-edges", "cycle-edges")

    if k is not None and edge_quantity:
        return _usage(f"{quantity} takes no subset size")
    if route == "recurrence" and (edge_quantity or k is not None):
        return _usage("recurrence route only computes set totals")
    if route == "conv" and not edge_quantity:
        return _usage("conv route only computes edge counts")

    try:
        if quantity == "path":
            if route == "closed":
                value = path_count(n, h) if k is None else path_count_k(n, h, k)
            elif route == "recurrence":
                value = path_count_rec(n, h)
            else:  # oracle
                value = _oracle_set_count(PATH, n, h, k, args.cap)
        elif quantity == "cycle":
            if route == "closed":
                value = cycle_count(n, h) if k is None else cycle_count_k(n, h, k)
            elif route == "recurrence":
                value = cycle_count_rec(n, h)
            else:
                value = _oracle_set_count(CYCLE, n, h, k, args.cap)
        elif quantity == "path-edges":
            if route == "closed":
                value = path_edges(n, h)
            elif route == "conv":
                value = path_edges_conv(n, h)
            else:
                value = cube.cover_count(GapGraph(PATH, n, h), cap=args.cap)
        else:  # cycle-edges
            if route == "closed":
                value = cycle_edges(n, h)
            elif route == "conv":
                if n <= h:
                    return _usage(f"conv route needs n > h, got n={n} h={h}")
                value = cycle_edges_conv(n, h)
            else:
                value = cube.cover_count(GapGraph(CYCLE, n, h), cap=args.cap)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY

    _emit(f"{value}\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------

def _cmd_seq(args) -> int:
    h = args.h
    kind = args.kind
    try:
        if kind == "F":
            start, term = 1, (lambda n: h_fibonacci(h, n))
        elif kind == "L":
            start, term = 1, (lambda n: h_lucas(h, n))
        elif kind == "F-ext":
            start, term = -h, (lambda n: extended_fib(h, n))
        else:
            start, term = -h, (lambda n: extended_lucas(h, n))
        values = [(n, term(n)) for n in range(start, args.n_max + 1)]
    except ValueError as exc:
        return _usage(str(exc))

    if args.format == "json":
        payload = {"kind": kind, "h": h, "start": start,
                   "values": [v for _, v in values]}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{n}\t{v}\n" for n, v in values), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    reports = verify.run_suite(args.n_max, args.h_max, args.oracle_n_max)
    if args.format == "json":
        text = verify.reports_to_json(reports)
    else:
        text = verify.format_summary(reports)
    _emit(text, args.out)
    failed = any(r.failed for r in reports)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcubes",
        description="Exact counts, diagrams, and identity checks for "
                    "independent sets of path and cycle powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="render a count/sequence table")
    t.add_argument("which", choices=["pk", "ck", "p", "c", "F", "L", "H", "M"])
    t.add_argument("--h", help="gap parameter, single value or lo:hi range")
    t.add_argument("--n-max", type=int, default=None)
    t.add_argument("--k-max", type=int, default=None)
    t.add_argument("--paper-layout", action="store_true",
                   help="reproduce the published table extents cell-for-cell")
    t.add_argument("--format", default="tsv", choices=["tsv", "csv", "json"])
    t.add_argument("--out", default=None)
    t.set_defaults(func=_cmd_table)

    c = sub.add_parser("cube", help="export an inclusion diagram")
    c.add_argument("kind", choices=[PATH, CYCLE])
    c.add_argument("n", type=int)
    c.add_argument("h", type=int)
    c.add_argument("--format", default="dot", choices=["dot", "json", "edgelist"])
    c.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"enumeration size cap (default {DEFAULT_CAP})")
    c.add_argument("--out", default=None)
    c.set_defaults(func=_cmd_cube)

    g = sub.add_parser("graph", help="export a path/cycle power")
    g.add_argument("kind", choices=[PATH, CYCLE])
    g.add_argument("n", type=int)
    g.add_argument("h", type=int)
    g.add_argument("--format", default="edgelist", choices=["edgelist", "dot"])
    g.add_argument("--out", default=None)
    g.set_defaults(func=_cmd_graph)

    k = sub.add_parser("count", help="print one exact count")
    k.add_argument("quantity",
                   choices=["path", "cycle", "path-edges", "cycle-edges"],
                   help="independent-set totals, or inclusion-diagram edges")
    k.add_argument("n", type=int)
    k.add_argument("h", type=int)
    k.add_argument("k", type=int, nargs="?", default=None,
                   help="subset size (set counts only)")
    k.add_argument("--route", default="closed",
                   choices=["closed", "recurrence", "conv", "oracle"])
    k.add_argument("--cap", type=int, default=DEFAULT_CAP)
    k.add_argument("--out", default=None)
    k.set_defaults(func=_cmd_count)

    s = sub.add_parser("seq", help="dump a delayed Fibonacci/Lucas sequence")
    s.add_argument("kind", choices=["F", "L", "F-ext", "L-ext"])
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--n-max", type=int, default=15)
    s.add_argument("--format", default="tsv", choices=["tsv", "json"])
    s.add_argument("--out", default=None)
    s.set_defaults(func=_cmd_seq)

    v = sub.add_parser("verify", help="run the identity cross-check suite")
    v.add_argument("--n-max", type=int, default=40)
    v.add_argument("--h-max", type=int, default=10)
    v.add_argument("--oracle-n-max", type=int, default=16)
    v.add_argument("--format", default="summary", choices=["summary", "json"])
    v.add_argument("--out", default=None)
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def script() -> None:
    sys.exit(main())


if __name__ == "__main__":
    script()
