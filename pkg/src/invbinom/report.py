"""Serialise verification records as JSON, CSV or an aligned text table.

Exact values travel as canonical strings and are never converted to floats.
:func:`parse_value` turns those strings back into exact objects, so a report
can be re-checked without rerunning anything.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Any, Iterable, TextIO

from .exact import SqrtPiScaled, canonical
from .identities.registry import VerificationReport
from .qalgebra import LaurentPoly, QRational

FORMATS = ("json", "csv", "text")

COLUMNS = ("case", "params", "n", "lhs", "rhs", "relation", "equal", "skipped_reason", "elapsed_us", "notes")

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "invbinom verification report",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["case", "params", "n", "lhs", "rhs", "equal", "elapsed_us"],
        "additionalProperties": False,
        "properties": {
            "case": {"type": "string"},
            "params": {"type": "object", "additionalProperties": {"type": "string"}},
            "n": {"type": "integer"},
            "lhs": {"type": "string"},
            "rhs": {"type": "string"},
            "relation": {"enum": ["=", "<="]},
            "equal": {"type": ["boolean", "null"]},
            "skipped_reason": {"type": "string"},
            "elapsed_us": {"type": "integer", "minimum": 0},
            "notes": {"type": "object", "additionalProperties": {"type": "string"}},
        },
    },
}


def param_text(value) -> str:
    return value if isinstance(value, str) else canonical(value)


def record_dict(rec: VerificationReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "case": rec.case,
        "params": {name: param_text(v) for name, v in rec.params},
        "n": rec.n,
        "lhs": rec.lhs,
        "rhs": rec.rhs,
        "relation": rec.relation,
        "equal": rec.equal,
    }
    if rec.skipped_reason is not None:
        out["skipped_reason"] = rec.skipped_reason
    out["elapsed_us"] = rec.elapsed_us
    if rec.notes:
        out["notes"] = dict(rec.notes)
    return out


def _flat(rec: VerificationReport) -> list[str]:
    d = record_dict(rec)
    params = ";".join(f"{k}={v}" for k, v in d["params"].items())
    notes = ";".join(f"{k}={v}" for k, v in d.get("notes", {}).items())
    equal = "" if rec.equal is None else str(rec.equal).lower()
    return [
        rec.case, params, str(rec.n), rec.lhs, rec.rhs, rec.relation, equal,
        rec.skipped_reason or "", str(rec.elapsed_us), notes,
    ]


def to_json(records: Iterable[VerificationReport]) -> str:
    return json.dumps([record_dict(r) for r in records], indent=1) + "\n"


def to_csv(records: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    # exact values are strings, so every non-numeric field is quoted
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        row: list[Any] = _flat(rec)
        row[2], row[8] = rec.n, rec.elapsed_us
        writer.writerow(row)
    return buf.getvalue()


def _status(rec: VerificationReport) -> str:
    if rec.skipped:
        return "skip"
    return "ok" if rec.equal else "FAIL"


def to_text(records: Iterable[VerificationReport], width: int = 48) -> str:
    def clip(s: str) -> str:
        return s if len(s) <= width else s[: width - 3] + "..."

    header = ("case", "params", "n", "status", "lhs", "rel", "rhs", "detail")
    rows = []
    for rec in records:
        flat = _flat(rec)
        detail = rec.skipped_reason or flat[9]
        rows.append((rec.case, flat[1], str(rec.n), _status(rec), clip(rec.lhs), rec.relation, clip(rec.rhs), detail))
    if not rows:
        return "(no records)\n"
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(records: Iterable[VerificationReport], fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        return to_json(records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "text":
        return to_text(records)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def emit_report(records: Iterable[VerificationReport], fmt: str, sink: TextIO) -> None:
    sink.write(render(records, fmt))


# --- reading values back -----------------------------------------------------------

_SQRTPI = re.compile(r"^(-?\d+(?:/\d+)?)\*sqrtpi\^(-?\d+)$")
_QRAT = re.compile(r"^\((.*)\)/\((.*)\)$")
_TERM = re.compile(r"^(?:(\d+)\*)?q(?:\^(-?\d+))?$")


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``, e.g. "1 - 2*q^2 + q^-3"."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    tokens = text.split(" ")
    if tokens[0].startswith("-"):
        tokens[0] = tokens[0][1:]
        tokens.insert(0, "-")
    else:
        tokens.insert(0, "+")
    terms: dict[int, int] = {}
    for sign, body in zip(tokens[::2], tokens[1::2]):
        if sign not in "+-":
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        if body.isdigit():
            coeff, exp = int(body), 0
        else:
            m = _TERM.match(body)
            if not m:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            coeff = int(m.group(1) or 1)
            exp = int(m.group(2)) if m.group(2) is not None else 1
        terms[exp] = terms.get(exp, 0) + (coeff if sign == "+" else -coeff)
    return LaurentPoly.from_terms(terms)


def parse_value(text: str) -> Fraction | SqrtPiScaled | QRational:
    """Exact value from its canonical string."""
    if m := _QRAT.match(text):
        return QRational(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    if m := _SQRTPI.match(text):
        return SqrtPiScaled(Fraction(m.group(1)), int(m.group(2)))
    return Fraction(text)


def recheck(obj: dict[str, Any]) -> bool | None:
    """Recompute a JSON record's ``equal`` flag from its lhs/rhs strings."""
    if "skipped_reason" in obj:
        return None
    lhs, rhs = parse_value(obj["lhs"]), parse_value(obj["rhs"])
    if obj.get("relation", "=") == "<=":
        return lhs <= rhs
    return lhs == rhs
