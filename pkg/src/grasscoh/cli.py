"""Command-line front end: ``grasscoh {coh,chi,rank,classify,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bott import DIM_G, Interval, is_exact
from .chow import chi_hrr
from .expr import ParseError, PlethysmError, ZeroBundleError
from .les import (
    InconsistentPresentationError,
    MixedBundle,
    ResolutionError,
    default_engine,
)
from .verify import SUITES, Status, VerificationReport, classify, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_INDETERMINATE = 0, 1, 2, 3
DEFAULT_TWISTS = (-10, 10)
FORMATS = ("table", "json", "csv")


def _entry_json(e):
    return [e.lo, e.hi] if isinstance(e, Interval) else e


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _resolve(text: str) -> MixedBundle:
    return default_engine().registry.resolve(text)


def _presentations(b: MixedBundle) -> dict[str, list[str]]:
    reg = default_engine().registry
    pending, seen = set(b.names()), set()
    while pending:
        name = pending.pop()
        seen.add(name)
        for p in reg[name].presentations:
            for _, piece in p.pieces():
                pending |= piece.names() - seen
    return {name: [" -> ".join(_slot_text(s) for s in p.slots) for p in reg[name].presentations] for name in sorted(seen)}


def _slot_text(s) -> str:
    if isinstance(s, MixedBundle):
        return str(s)
    return "F" if s.twist == 0 else f"F({s.twist})"


def coh_record(text: str, twist_min: int | None, twist_max: int | None) -> dict:
    """Cohomology rows for ``text`` over the requested twists and its certified window."""
    engine = default_engine()
    b = _resolve(text)
    win = engine.mixed_window(b)
    if twist_min is None and twist_max is None:
        lo, hi = DEFAULT_TWISTS
        if win is not None:
            lo, hi = min(lo, win.lo), max(hi, win.hi)
    else:
        lo = twist_min if twist_min is not None else DEFAULT_TWISTS[0]
        hi = twist_max if twist_max is not None else DEFAULT_TWISTS[1]
    if lo > hi:
        raise ValueError(f"empty twist range {lo}..{hi}")
    rows = []
    for l in range(lo, hi + 1):
        row = engine.row(b.twist(l))
        rows.append(
            {
                "l": l,
                "h": [_entry_json(e) for e in row.h],
                "chi": row.chi,
                "exact": [is_exact(e) for e in row.h],
            }
        )
    return {
        "expr": text,
        "rows": rows,
        "metadata": {
            "twists": [lo, hi],
            "window": None if win is None else {"lo": win.lo, "hi": win.hi, "certified": win.certified},
            "presentations": _presentations(b),
        },
    }


def _cell(v) -> str:
    return f"{v[0]}..{v[1]}" if isinstance(v, list) else str(v)


def render_coh(record: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(record)
    header = ["l"] + [f"h{i}" for i in range(DIM_G + 1)] + ["chi"]
    body = [[str(r["l"])] + [_cell(v) for v in r["h"]] + [str(r["chi"])] for r in record["rows"]]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(row[k]) for row in [header] + body) for k in range(len(header))]
    lines = [f"# {record['expr']}"]
    win = record["metadata"]["window"]
    if win is not None:
        state = "certified" if win["certified"] else "NOT certified"
        lines.append(f"# window {win['lo']}..{win['hi']} ({state})")
    for row in [header] + body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def render_report(report: VerificationReport, fmt: str) -> str:
    claims = [c.as_dict() for c in report.claims]
    if fmt == "json":
        return dump_json({"suite": report.suite, "status": report.status.value, "claims": claims})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["status", "claim", "computed", "expected", "location"])
        for c in claims:
            writer.writerow([c["status"], c["claim"], json.dumps(c["computed"]), json.dumps(c["expected"]), c["location"]])
        return buf.getvalue().rstrip("\n")
    lines = [f"{c['status']:<25} {c['claim']}" for c in claims]
    lines.append(f"overall: {report.status.value} ({len(claims)} claims)")
    bad = report.first_mismatch()
    if bad is not None:
        lines.append(f"first mismatch: {bad.claim}; computed {bad.computed!r}, expected {bad.expected!r} {bad.detail}".rstrip())
    return "\n".join(lines)


def report_exit(report: VerificationReport) -> int:
    return {Status.EXACT: EXIT_OK, Status.MISMATCH: EXIT_MISMATCH}.get(report.status, EXIT_INDETERMINATE)


def render_classification(c, fmt: str) -> str:
    d = c.as_dict()
    if fmt == "json":
        return dump_json(d)
    lines = [f"{c.expr}: level {c.level if c.level else 'none'}"]
    for o in d["outcomes"]:
        w = o["witness"]
        if w is None:
            lines.append(f"  {o['level']}: {o['status']}")
        else:
            lines.append(
                f"  {o['level']}: {o['status']} ({w['condition']}) h^{w['i']}(F (x) {w['tensor']}({w['l']})) = {_cell(w['value'])}"
            )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grasscoh", description="Cohomology of homogeneous bundles on G(1,4).")
    sub = parser.add_subparsers(dest="command", required=True)

    coh = sub.add_parser("coh", help="cohomology table h^0..h^6 and chi per twist")
    coh.add_argument("expr")
    coh.add_argument("tmin", nargs="?", type=int)
    coh.add_argument("tmax", nargs="?", type=int)
    coh.add_argument("--twist-min", type=int)
    coh.add_argument("--twist-max", type=int)
    coh.add_argument("--format", choices=FORMATS, default="table")

    chi = sub.add_parser("chi", help="Euler characteristic by Bott and by Riemann-Roch")
    chi.add_argument("expr")

    rank = sub.add_parser("rank", help="rank of a bundle")
    rank.add_argument("expr")

    cls = sub.add_parser("classify", help="strongest hypothesis level satisfied")
    cls.add_argument("expr")
    cls.add_argument("--format", choices=("table", "json"), default="table")

    ver = sub.add_parser("verify", help="run the reproduction suites")
    ver.add_argument("suite", nargs="?", choices=(*SUITES, "all"))
    ver.add_argument("--suite", dest="suite_opt", choices=(*SUITES, "all"))
    ver.add_argument("--format", choices=FORMATS, default="table")
    return parser


def _run(args, out) -> int:
    if args.command == "coh":
        tmin = args.twist_min if args.twist_min is not None else args.tmin
        tmax = args.twist_max if args.twist_max is not None else args.tmax
        if tmin is not None and tmax is None:
            tmax = tmin
        record = coh_record(args.expr, tmin, tmax)
        print(render_coh(record, args.format), file=out)
        exact = all(all(r["exact"]) for r in record["rows"])
        return EXIT_OK if exact else EXIT_INDETERMINATE
    if args.command == "chi":
        b = _resolve(args.expr)
        bott_chi = default_engine().chi(b)
        hrr_chi = chi_hrr(default_engine().registry.k_class(b))
        print(f"bott {bott_chi}\nhrr {hrr_chi}", file=out)
        return EXIT_OK if bott_chi == hrr_chi else EXIT_MISMATCH
    if args.command == "rank":
        print(default_engine().registry.rank(_resolve(args.expr)), file=out)
        return EXIT_OK
    if args.command == "classify":
        c = classify(args.expr)
        print(render_classification(c, args.format), file=out)
        return EXIT_INDETERMINATE if c.indeterminate else EXIT_OK
    if args.command == "verify":
        report = run_suite(args.suite_opt or args.suite or "all")
        print(render_report(report, args.format), file=out)
        return report_exit(report)
    raise AssertionError(args.command)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _run(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ResolutionError, PlethysmError, ZeroBundleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InconsistentPresentationError as exc:
        print(f"inconsistent presentations: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
