import csv
import io
import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from invbinom.exact import SqrtPiScaled, canonical
from invbinom.identities.registry import VerificationReport, verify
from invbinom.identities import families as th
from invbinom.qalgebra import LaurentPoly, QRational, q_monomial
from invbinom.report import REPORT_SCHEMA, emit_report, parse_laurent, parse_value, recheck, render

ROCKETT_2 = VerificationReport("rockett", (), 2, "5/2", "5/2", True)
T3_POLE = VerificationReport(
    "t3", (("a", Fraction(-1)), ("n", 3), ("m", 3)), 3, "", "", None, skipped_reason="pole: a+i-n+2=0 at i=1"
)


def dump(records, fmt):
    sink = io.StringIO()
    emit_report(records, fmt, sink)
    return sink.getvalue()


def test_json_record_fields():
    [obj] = json.loads(dump([ROCKETT_2], "json"))
    assert obj["lhs"] == "5/2" and obj["rhs"] == "5/2" and obj["equal"] is True
    assert "skipped_reason" not in obj
    [obj] = json.loads(dump([T3_POLE], "json"))
    assert obj["skipped_reason"] == "pole: a+i-n+2=0 at i=1"
    assert obj["params"] == {"a": "-1", "n": "3", "m": "3"}
    assert obj["equal"] is None


@pytest.mark.parametrize("fmt", ["json", "csv", "text"])
def test_empty_documents(fmt):
    text = dump([], fmt)
    if fmt == "json":
        assert json.loads(text) == []
    elif fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        assert len(rows) == 1 and rows[0][0] == "case"
    else:
        assert text.strip()


def test_csv_quotes_exact_values():
    text = dump([ROCKETT_2, T3_POLE], "csv")
    assert '"5/2","5/2"' in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[1]["skipped_reason"] == "pole: a+i-n+2=0 at i=1"
    assert rows[1]["params"] == "a=-1;n=3;m=3"


def test_text_table_is_aligned():
    lines = dump([ROCKETT_2, T3_POLE], "text").splitlines()
    assert lines[0].startswith("case") and set(lines[1]) <= {"-", " "}
    assert lines[2].index("ok") == lines[3].index("skip")


def test_unknown_format():
    with pytest.raises(ValueError):
        render([], "xml")


def test_schema_validates_real_reports():
    records = verify(["t2", "t4", "remark_b", "limit"], 4)
    doc = json.loads(render(records, "json"))
    jsonschema.validate(doc, REPORT_SCHEMA)


def test_round_trip_reproduces_equal_flags():
    records = verify(["t1", "t2", "t4", "rockett", "mansour"], 6)
    records += [VerificationReport("t1", (), 9, "1/2", "1/3", False), T3_POLE]
    for rec, obj in zip(records, json.loads(render(records, "json"))):
        assert recheck(obj) == rec.equal


def test_limit_records_use_inequality():
    doc = json.loads(render(verify(["limit"], 50), "json"))
    assert {o["relation"] for o in doc} == {"<="}
    assert all(recheck(o) for o in doc)


laurents = st.builds(LaurentPoly, st.lists(st.integers(-30, 30), max_size=6), st.integers(-5, 5))


@given(laurents)
def test_laurent_text_round_trip(p):
    assert parse_laurent(str(p)) == p


@given(laurents, laurents.filter(lambda p: not p.is_zero()))
def test_qrational_text_round_trip(num, den):
    r = QRational(num, den)
    assert parse_value(canonical(r)) == r


@given(st.fractions(max_denominator=10**6), st.integers(-3, 3))
def test_scalar_text_round_trip(x, e):
    assert parse_value(canonical(x)) == x
    v = SqrtPiScaled(x, e)
    assert parse_value(canonical(v)) == v


def test_real_values_round_trip():
    assert parse_value(canonical(th.t2_lhs(5))) == th.t2_lhs(5)
    assert parse_value(canonical(th.t4_lhs(3, Fraction(3, 2), Fraction(5, 2)))).exp == 2
    assert parse_laurent(str(q_monomial(-2) - 3)) == q_monomial(-2) - 3
