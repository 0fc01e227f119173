"""Command-line interface: ``rankcrank table|verify|scan``.

Exit codes: 0 all checks pass, 1 a mathematical mismatch or violation,
2 a usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .cache import get_table
from .moments import inequality_scan, moment, sstar, symmetrized_moment
from .partitions import (
    CRANK_CLASSICAL,
    CRANK_S2,
    RANK_CLASSICAL,
    RANK_S1,
    enumerate_partitions,
    spt_finite,
)
from .suite import IDENTITIES, plan, run

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

TABLE_KINDS = ("partitions", "spt", "rank", "crank", "moments", "symmetrized", "sstar")

log = logging.getLogger("rankcrank")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"1..5"`` or ``"1,4,7"`` to a sorted list of distinct integers."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return sorted(set(values))


def parse_cap(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return [None]
    return parse_range(text)


def parse_rho(text: str) -> tuple[Fraction, Fraction]:
    try:
        a, b = text.split(",")
        return Fraction(a), Fraction(b)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"--rho expects two rationals 'r1,r2', got {text!r}") from None


# -- output ---------------------------------------------------------------------

def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text_table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def envelope(command: str, params: dict, data, elapsed: float) -> str:
    doc = {
        "tool_version": __version__,
        "command": command,
        "params": params,
        "data": data,
        "metadata": {"elapsed_seconds": round(elapsed, 6)},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(fmt, header, rows, command, params, elapsed, json_data=None) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        data = json_data if json_data is not None else {"columns": list(header), "rows": [list(r) for r in rows]}
        return envelope(command, params, data, elapsed)
    return _text_table(header, rows)


# -- table ------------------------------------------------------------------------

def _single(values, flag):
    if len(values) != 1:
        raise UsageError(f"{flag} must be a single value for this table")
    return values[0]


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    kind, ns, fmt = args.kind, args.n, args.format
    params = {"kind": kind, "n": ns, "N": args.N, "k": args.k, "stat": args.stat}
    if min(ns) < 0:
        raise UsageError("--n must be non-negative")
    if kind == "partitions":
        cap = _single(args.N, "--N") if args.N else None
        header = ["n", "partition"]
        rows = [(n, "+".join(map(str, p)) or "()") for n in ns for p in enumerate_partitions(n, cap)]
        out = _render(fmt, header, rows, "table", params, time.perf_counter() - t0)
    elif kind == "sstar":
        nmax = max(ns)
        if nmax < 1:
            raise UsageError("--n must be >= 1 for sstar")
        tri = sstar(nmax)
        if fmt == "table":
            out = "".join(" ".join(map(str, r)) + "\n" for r in tri.rows)
        else:
            rows = [(n, k, tri(n, k)) for n in range(1, nmax + 1) for k in range(1, n + 1)]
            out = _render(fmt, ["n", "k", "value"], rows, "table", params, time.perf_counter() - t0,
                          json_data={"rows": [list(r) for r in tri.rows]})
    elif kind in ("rank", "crank"):
        cap = _single(args.N or [None], "--N")
        if cap is not None and cap < 1:
            raise UsageError("--N must be >= 1")
        tkind = {("rank", False): RANK_S1, ("crank", False): CRANK_S2,
                 ("rank", True): RANK_CLASSICAL, ("crank", True): CRANK_CLASSICAL}[kind, cap is None]
        table = get_table(tkind, cap, max(ns))
        rows = [(n, m, c) for n, m, c in table.entries() if n in ns]
        params["N"] = "inf" if cap is None else cap
        out = _render(fmt, ["n", "m", "value"], rows, "table", params, time.perf_counter() - t0,
                      json_data={"kind": tkind, "N": cap, "nmax": max(ns), "rows": [list(r) for r in rows]})
    else:
        out = _series_table(args, params, t0)
    _emit(out, args.output)
    return EXIT_OK


def _series_table(args, params, t0) -> str:
    kind, ns = args.kind, args.n
    if min(ns) < 1:
        raise UsageError("--n must be >= 1")
    Ns = args.N or [max(ns)]
    if None in Ns:
        raise UsageError("--N inf is only supported for rank/crank tables")
    if min(Ns) < 1:
        raise UsageError("--N must be >= 1")
    ks = args.k or [2]
    keys, rows = [], []
    if kind == "spt":
        for N in Ns:
            rows += [((N,), n, spt_finite(n, N)) for n in ns]
        keys = ["N"]
    else:
        f = moment if kind == "moments" else symmetrized_moment
        tkind = RANK_S1 if args.stat == "rank" else CRANK_S2
        for N in Ns:
            table = get_table(tkind, N, max(ns))
            rows += [((N, k), n, f(table, k, n)) for k in ks for n in ns]
        keys = ["N", "k"]
    # key columns appear only when they vary
    varying = [i for i, key in enumerate(keys) if len({r[0][i] for r in rows}) > 1]
    header = [keys[i] for i in varying] + ["n", "coefficient"]
    flat = [tuple(r[0][i] for i in varying) + (r[1], r[2]) for r in rows]
    return _render(args.format, header, flat, "table", params, time.perf_counter() - t0)


# -- verify -------------------------------------------------------------------------

def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    ns, Ns = args.n, args.N
    if min(Ns) is None or min(Ns) < 1:
        raise UsageError("--N must be a positive range")
    if min(ns) < 1 or min(args.k) < 1 or min(args.nu) < 1:
        raise UsageError("--n, --k and --nu must be positive")
    Q = args.Q if args.Q is not None else max(ns)
    if Q < 0:
        raise UsageError("--Q must be non-negative")
    if Q < max(ns):
        raise UsageError(f"--Q={Q} is below the largest requested n={max(ns)}")
    pairs = ("crank", "rank") if args.pair == "both" else (args.pair,)
    tasks = plan(args.identity, Ns, args.k, args.nu, Q, pairs, args.rho or ())
    reports = run(tasks, args.workers)
    failed = [r for r in reports if not r.passed]
    params = {"identity": args.identity, "N": Ns, "n": ns, "k": args.k, "nu": args.nu, "Q": Q,
              "pair": args.pair, "rho": [[str(a), str(b)] for a, b in (args.rho or ())]}
    if args.format == "json":
        data = {"reports": [r.to_json() for r in reports], "passed": not failed,
                "checked": len(reports), "failed": len(failed)}
        out = envelope("verify", params, data, time.perf_counter() - t0)
    elif args.format == "csv":
        rows = []
        for r in reports:
            mm = r.first_mismatch
            rows.append((r.identity, json.dumps(r.to_json()["params"], sort_keys=True), r.status,
                         "" if mm is None else mm.degree,
                         "" if mm is None else mm.lhs, "" if mm is None else mm.rhs))
        out = _csv(["identity", "params", "status", "mismatch_degree", "lhs", "rhs"], rows)
    else:
        lines = [r.to_text() for r in reports]
        lines.append(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    for r in failed:
        print(r.to_text(), file=sys.stderr)
    return EXIT_MISMATCH if failed else EXIT_OK


# -- scan ----------------------------------------------------------------------------

def cmd_scan(args) -> int:
    t0 = time.perf_counter()
    if None in args.N or min(args.N) < 1 or min(args.k) < 1 or min(args.n) < 1:
        raise UsageError("scan ranges must be positive integers")
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            report = inequality_scan(args.N, args.k, args.n, cap=args.cap, executor=pool)
    else:
        report = inequality_scan(args.N, args.k, args.n, cap=args.cap)
    params = {"N": args.N, "k": args.k, "n": args.n, "cap": args.cap}
    if args.format == "json":
        data = report.to_json()
        data.pop("elapsed")
        out = envelope("scan", params, data, time.perf_counter() - t0)
    elif args.format == "csv":
        rows = [(p.N, p.k, p.n, p.crank_moment, p.rank_moment, p.margin) for p in report.points]
        out = _csv(["N", "k", "n", "M_value", "N_value", "margin"], rows)
    else:
        lines = []
        if args.verbose:
            lines += [f"N={p.N} k={p.k} n={p.n}: M={p.crank_moment} N={p.rank_moment} margin={p.margin}"
                      for p in report.points]
        for v in report.violations:
            lines.append(f"VIOLATION N={v['N']} k={v['k']} n={v['n']}: {v['reason']}")
        lines.append(f"checked {report.checked} points (moment order 2k), "
                     f"{report.violation_count} violations")
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return EXIT_OK if report.passed else EXIT_MISMATCH


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankcrank", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.add_argument("--verbose", "-v", action="store_true")

    t = sub.add_parser("table", help="emit partitions, spt values, statistic tables, moments or S*")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--n", type=parse_range, default=parse_range("1..10"), help="n range, e.g. 1..20")
    t.add_argument("--N", type=parse_cap, default=None, help="cap N (range, or 'inf' for classical tables)")
    t.add_argument("--k", type=parse_range, default=None, help="moment order(s); default 2")
    t.add_argument("--stat", choices=("rank", "crank"), default="crank")
    common(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="verify identities coefficient by coefficient")
    v.add_argument("identity", choices=IDENTITIES + ("all",))
    v.add_argument("--N", type=parse_cap, default=parse_range("1..4"))
    v.add_argument("--n", type=parse_range, default=parse_range("1..20"))
    v.add_argument("--k", type=parse_range, default=parse_range("1..3"))
    v.add_argument("--nu", type=parse_range, default=parse_range("1..3"))
    v.add_argument("--Q", type=int, default=None, help="truncation order (default: max n)")
    v.add_argument("--pair", choices=("crank", "rank", "both"), default="both")
    v.add_argument("--rho", type=parse_rho, action="append",
                   help="Bailey transform parameters 'r1,r2' (repeatable)")
    v.add_argument("--workers", type=int, default=1)
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="scan the crank/rank moment inequality over a grid")
    s.add_argument("--N", type=parse_cap, default=parse_range("1..4"))
    s.add_argument("--k", type=parse_range, default=parse_range("1..3"), help="half-order k (moment 2k)")
    s.add_argument("--n", type=parse_range, default=parse_range("1..20"))
    s.add_argument("--cap", type=int, default=10, help="maximum violations to record")
    s.add_argument("--workers", type=int, default=1)
    common(s)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ArithmeticError as exc:
        print(f"rankcrank: arithmetic check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
