"""Command-line front end.

    invbinom verify --case rockett --max-n 50 --format json
    invbinom wz --case t1 --max-n 30
    invbinom limit --param n=10,50,100,1000
    invbinom bench --case t1 --max-n 200
    invbinom table

Exit status: 0 when every check passes, 1 when any check fails, 2 on a usage,
configuration or I/O error.  Set INVBINOM_OUTPUT_DIR to resolve relative
``--output`` paths (and default output files) against a directory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bench import BENCH_CASES, bench_case
from .identities.registry import CASES, Grid, VerificationReport, limit_records, verify
from .report import FORMATS, render
from .wz import Reconciliation, reconcile

COMMANDS = ("verify", "wz", "limit", "bench", "table")
OUTPUT_DIR_ENV = "INVBINOM_OUTPUT_DIR"
GRID_AXES = ("a", "b", "c", "x", "y", "n")
WZ_DEFAULT_MAX = {"t1": 30, "t2": 20}
BENCH_DEFAULT_MAX = {"rockett": 500, "t1": 200, "t2": 30}

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    case_ids: tuple[str, ...] = ()
    max_index: int | None = None
    overrides: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    fmt: str = "text"
    output: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.max_index is not None and self.max_index < 1:
            raise UsageError(f"--max-n must be >= 1, got {self.max_index}")
        unknown = [c for c in self.case_ids if c not in CASES]
        if unknown:
            raise UsageError(f"unknown case {unknown[0]!r}; known: {', '.join(CASES)}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        for name in self.overrides:
            if name not in GRID_AXES:
                raise UsageError(f"unknown parameter {name!r}; known: {', '.join(GRID_AXES)}")
        allowed = {"wz": WZ_DEFAULT_MAX, "bench": BENCH_DEFAULT_MAX}.get(self.command)
        if allowed is not None:
            bad = [c for c in self.case_ids if c not in allowed]
            if bad:
                raise UsageError(f"{self.command} supports cases {', '.join(allowed)}, not {bad[0]!r}")

    def output_path(self) -> Path | None:
        out_dir = os.environ.get(OUTPUT_DIR_ENV)
        if self.output == "-":
            return None
        if self.output is None:
            if not out_dir:
                return None
            ext = {"json": "json", "csv": "csv", "text": "txt"}[self.fmt]
            return Path(out_dir) / f"{self.command}.{ext}"
        path = Path(self.output)
        return Path(out_dir) / path if out_dir and not path.is_absolute() else path


def parse_param(text: str) -> tuple[str, tuple[Fraction, ...]]:
    name, sep, values = text.partition("=")
    if not sep or not values:
        raise UsageError(f"--param expects name=v1,v2,..., got {text!r}")
    try:
        return name.strip(), tuple(Fraction(v.strip()) for v in values.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad value in --param {text!r}: {exc}") from None


# --- commands -----------------------------------------------------------------------


def _summary(records: Sequence[VerificationReport]) -> list[dict]:
    rows: dict[str, dict] = {}
    for r in records:
        row = rows.setdefault(r.case, {"case": r.case, "samples": 0, "passed": 0, "failed": 0, "skipped": 0, "elapsed_us": 0})
        row["samples"] += 1
        row["elapsed_us"] += r.elapsed_us
        if r.skipped:
            row["skipped"] += 1
        elif r.equal:
            row["passed"] += 1
        else:
            row["failed"] += 1
    return list(rows.values())


def _render_rows(rows: list[dict], fmt: str, header: dict | None = None) -> str:
    if fmt == "json":
        doc = rows if header is None else {"header": header, "rows": rows}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    if header:
        for k, v in header.items():
            buf.write(f"# {k}: {v}\n")
    if not rows:
        return buf.getvalue() + ("" if fmt == "csv" else "(no rows)\n")
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.DictWriter(buf, cols, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)), "  ".join("-" * w for w in widths)]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return buf.getvalue() + "\n".join(lines) + "\n"


def _records_exit(records: Sequence[VerificationReport]) -> int:
    return EXIT_MISMATCH if any(r.equal is False for r in records) else EXIT_OK


def _grid(cfg: RunConfig) -> Grid:
    return Grid(overrides=dict(cfg.overrides))


def run_verify(cfg: RunConfig) -> tuple[str, int]:
    records = verify(cfg.case_ids or tuple(CASES), cfg.max_index, _grid(cfg))
    return render(records, cfg.fmt), _records_exit(records)


def run_limit(cfg: RunConfig) -> tuple[str, int]:
    ns = cfg.overrides.get("n") or Grid().limit_ns
    if any(n.denominator != 1 or n < 4 for n in ns):
        raise UsageError("limit needs integer n >= 4")
    records = limit_records([int(n) for n in ns])
    return render(records, cfg.fmt), _records_exit(records)


def _wz_header(rec: Reconciliation, n_max: int) -> dict:
    return {
        "case": rec.case,
        "n_max": n_max,
        "accepted": rec.accepted or "none",
        "note": rec.note,
        "printed": "pass" if rec.printed.passed else f"fail ({len(rec.printed.mismatches)} mismatches)",
    }


def _wz_rows(rec: Reconciliation) -> list[dict]:
    rows = []
    for variant, rep in [("printed", rec.printed), *rec.candidates.items()]:
        first = rep.mismatches[0] if rep.mismatches else None
        rows.append({
            "case": rec.case,
            "variant": variant,
            "passed": rep.passed,
            "checked": rep.checked,
            "mismatches": len(rep.mismatches),
            "first_mismatch": "" if first is None else f"(n,k)=({first.n},{first.k})",
        })
    return rows


def run_wz(cfg: RunConfig) -> tuple[str, int]:
    cases = cfg.case_ids or tuple(WZ_DEFAULT_MAX)
    chunks, code = [], EXIT_OK
    docs = []
    for cid in cases:
        n_max = cfg.max_index or WZ_DEFAULT_MAX[cid]
        rec = reconcile(CASES[cid].certificate(), n_max)
        if not rec.passed:
            code = EXIT_MISMATCH
        header = _wz_header(rec, n_max)
        if cfg.fmt == "json":
            variants = {"printed": rec.printed.to_json(), **{k: v.to_json() for k, v in rec.candidates.items()}}
            docs.append({"header": header, "variants": variants})
        else:
            chunks.append(_render_rows(_wz_rows(rec), cfg.fmt, header))
    if cfg.fmt == "json":
        return json.dumps(docs, indent=1) + "\n", code
    return "".join(chunks), code


def run_bench(cfg: RunConfig) -> tuple[str, int]:
    rows = []
    for cid in cfg.case_ids or BENCH_CASES:
        row = bench_case(cid, cfg.max_index or BENCH_DEFAULT_MAX[cid]).to_dict()
        for k in ("naive_seconds", "incremental_seconds"):
            row[k] = round(row[k], 4)
        rows.append(row)
    code = EXIT_OK if all(r["agree"] for r in rows) else EXIT_MISMATCH
    return _render_rows(rows, cfg.fmt), code


def run_table(cfg: RunConfig) -> tuple[str, int]:
    records = verify(cfg.case_ids or tuple(CASES), cfg.max_index, _grid(cfg))
    rows = _summary(records)
    return _render_rows(rows, cfg.fmt), _records_exit(records)


RUNNERS = {"verify": run_verify, "wz": run_wz, "limit": run_limit, "bench": run_bench, "table": run_table}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        cfg.validate()
        text, code = RUNNERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"invbinom: {exc}", file=stderr)
        return EXIT_USAGE
    try:
        path = cfg.output_path()
        if path is None:
            stdout.write(text)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
    except OSError as exc:
        print(f"invbinom: cannot write report: {exc}", file=stderr)
        return EXIT_USAGE
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invbinom", description="Exact checks of reciprocal binomial sums.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--case", action="append", default=[], dest="cases", help="case id; repeatable")
    parser.add_argument("--max-n", type=int, default=None, help="largest index (>= 1)")
    parser.add_argument("--param", action="append", default=[], help="grid override name=v1,v2,...")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--output", default=None, help=f"report path; '-' for stdout; relative to ${OUTPUT_DIR_ENV} if set")
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    overrides = dict(parse_param(p) for p in args.param)
    return RunConfig(args.command, tuple(args.cases), args.max_n, overrides, args.format, args.output)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except UsageError as exc:
        print(f"invbinom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    # argparse itself exits with status 2 on malformed flags
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
