import json
from fractions import Fraction

import pytest

from invbinom.exact import binomial
from invbinom.identities import families as th
from invbinom.recurrence import unroll
from invbinom.wz import (
    BivariateTerm,
    Certificate,
    SupportError,
    check_wz,
    inhomogeneous_rhs,
    reconcile,
    t1_antidifference_printed,
    t1_fixture,
    t2_antidifference_printed,
    t2_fixture,
)


def test_t1_printed_coefficient_fails_at_small_cells():
    fixture = t1_fixture()
    report = check_wz(fixture.printed, 1)
    cells = {(m.n, m.k) for m in report.mismatches}
    assert (1, 0) in cells and (0, 0) in cells
    bad = next(m for m in report.mismatches if (m.n, m.k) == (1, 0))
    assert (bad.lhs, bad.rhs) == (Fraction(47), Fraction(29))


def test_t1_reconciliation_accepts_cubic_coefficient():
    rec = reconcile(t1_fixture(), 30)
    assert rec.accepted == "reconciled"
    assert not rec.printed.passed
    assert rec.candidates["reconciled"].checked == sum(n + 1 for n in range(31))
    assert rec.note.startswith("erratum")


def test_t1_certificate_implies_sum_recurrence():
    cert = t1_fixture().candidates["reconciled"]
    rec = th.t1_recurrence()
    assert [inhomogeneous_rhs(cert, n) for n in range(4)] == [10, 43, 118, 253]
    assert all(inhomogeneous_rhs(cert, n) == rec.rhs(n) for n in range(30))


def test_cancelled_antidifference_matches_printed_inside_range():
    G = t1_fixture().printed.antidifference
    for n in range(12):
        for k in range(n + 1):
            assert G(n, k) == t1_antidifference_printed(n, k)
    G2 = t2_fixture().printed.antidifference
    for n in range(8):
        for k in range(n + 1):
            assert G2(n, k) == t2_antidifference_printed(n, k)


def test_t2_printed_certificate_passes_and_variant_fails():
    rec = reconcile(t2_fixture(), 10)
    assert rec.accepted == "printed"
    assert not rec.candidates["summand-exponent -k(k-1)"].passed


def test_t2_certificate_implies_sum_recurrence():
    cert = t2_fixture().printed
    rec = th.t2_recurrence()
    assert all(inhomogeneous_rhs(cert, n) == rec.rhs(n) for n in range(12))


def test_support_is_enforced():
    F = BivariateTerm(lambda n, k: Fraction(1, k - 2), lambda n, k: 0 <= k <= n, "F")
    with pytest.raises(SupportError, match="outside"):
        F(3, 5)
    with pytest.raises(SupportError, match="divides by zero"):
        F(3, 2)


def test_report_serialises():
    report = check_wz(t1_fixture().printed, 2)
    doc = json.loads(json.dumps(report.to_json()))
    assert doc["passed"] is False and doc["checked"] == 6
    assert {"n": 1, "k": 0, "lhs": "47", "rhs": "29"} in doc["mismatches"]


def test_trivial_certificate():
    # 2 C(n,k) - C(n+1,k) = C(n,k) - C(n,k-1), so G(n,k) = C(n,k-1)
    F = BivariateTerm(lambda n, k: binomial(n, k), lambda n, k: k >= 0)
    G = BivariateTerm(lambda n, k: binomial(n, k - 1) if k >= 1 else Fraction(0), lambda n, k: k >= 0)
    cert = Certificate(F, G, lambda n: Fraction(-1), lambda n: Fraction(2))
    assert check_wz(cert, 10, lambda n: range(n + 3)).passed


def test_reconciled_recurrence_unrolls_to_brute_force():
    assert unroll(th.t1_recurrence(), 50)[1:] == [th.t1_lhs(n) for n in range(1, 51)]
    printed = unroll(th.t1_recurrence(tail_power=2), 5)
    assert printed[2] != th.t1_lhs(2)
