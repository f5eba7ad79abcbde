"""Pointwise checking of certificate equations

    lead(n) F(n+1, k) + tail(n) F(n, k) = G(n, k+1) - G(n, k)

and the inhomogeneous right-hand side they imply for S(n) = sum_{k<n} F(n, k):

    lead(n) S(n+1) + tail(n) S(n) = G(n, n) - G(n, 0) + lead(n) F(n+1, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Generic, NamedTuple, TypeVar

from .exact import binomial, canonical
from .qalgebra import QRational, gauss_binomial, q_monomial, q_pochhammer

T = TypeVar("T")

__all__ = [
    "BivariateTerm",
    "Certificate",
    "CertificateFixture",
    "Mismatch",
    "Reconciliation",
    "SupportError",
    "WZReport",
    "check_wz",
    "inhomogeneous_rhs",
    "reconcile",
    "t1_fixture",
    "t2_fixture",
]


class SupportError(ValueError):
    """A term was evaluated outside its declared support."""


@dataclass(frozen=True)
class BivariateTerm(Generic[T]):
    fn: Callable[[int, int], T]
    support: Callable[[int, int], bool]
    name: str = "term"

    def __call__(self, n: int, k: int) -> T:
        if not self.support(n, k):
            raise SupportError(f"{self.name}({n}, {k}) is outside its support")
        try:
            return self.fn(n, k)
        except ZeroDivisionError as exc:
            raise SupportError(f"{self.name}({n}, {k}) divides by zero inside its support") from exc


@dataclass(frozen=True)
class Certificate(Generic[T]):
    summand: BivariateTerm[T]
    antidifference: BivariateTerm[T]
    lead: Callable[[int], T]
    tail: Callable[[int], T]


class Mismatch(NamedTuple):
    n: int
    k: int
    lhs: object
    rhs: object


@dataclass
class WZReport:
    passed: bool
    checked: int
    mismatches: list[Mismatch] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "mismatches": [
                {"n": m.n, "k": m.k, "lhs": canonical(m.lhs), "rhs": canonical(m.rhs)}
                for m in self.mismatches
            ],
        }


def _full_range(n: int) -> range:
    return range(0, n + 1)


def check_wz(
    cert: Certificate[T],
    n_max: int,
    k_range: Callable[[int], range] = _full_range,
    n_min: int = 0,
) -> WZReport:
    """Compare both sides exactly at every (n, k) with n_min <= n <= n_max, k in k_range(n)."""
    F, G = cert.summand, cert.antidifference
    mismatches = []
    checked = 0
    for n in range(n_min, n_max + 1):
        a, b = cert.lead(n), cert.tail(n)
        for k in k_range(n):
            lhs = a * F(n + 1, k) + b * F(n, k)
            rhs = G(n, k + 1) - G(n, k)
            checked += 1
            if lhs != rhs:
                mismatches.append(Mismatch(n, k, lhs, rhs))
    return WZReport(not mismatches, checked, mismatches)


def inhomogeneous_rhs(cert: Certificate[T], n: int) -> T:
    G = cert.antidifference
    return G(n, n) - G(n, 0) + cert.lead(n) * cert.summand(n + 1, n)


@dataclass(frozen=True)
class CertificateFixture(Generic[T]):
    """A certificate as printed plus declared candidate corrections."""

    case: str
    printed: Certificate[T]
    candidates: dict[str, Certificate[T]]
    note: str = ""


@dataclass
class Reconciliation:
    case: str
    printed: WZReport
    candidates: dict[str, WZReport]
    accepted: str | None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.accepted is not None


def reconcile(fixture: CertificateFixture, n_max: int, k_range=_full_range) -> Reconciliation:
    """Check the printed certificate, then every declared candidate.

    The accepted variant is "printed" when it passes, otherwise the first
    passing candidate in declaration order.  Nothing is substituted silently:
    every variant's report is returned.
    """
    printed = check_wz(fixture.printed, n_max, k_range)
    cands = {name: check_wz(c, n_max, k_range) for name, c in fixture.candidates.items()}
    if printed.passed:
        accepted = "printed"
    else:
        accepted = next((name for name, rep in cands.items() if rep.passed), None)
    return Reconciliation(fixture.case, printed, cands, accepted, fixture.note)


# --- fixtures ----------------------------------------------------------------


def _t1_summand(n: int, k: int) -> Fraction:
    return 1 / binomial(n, k) ** 2


def _t1_antidifference(n: int, k: int) -> Fraction:
    # (2k-3n-6)(k-n-1)^2 / C(n,k)^2 with (k-n-1)^2 (n-k)!^2 folded into (n-k+1)!^2,
    # which also covers k = n+1 where the printed form is 0 * pole
    return Fraction((2 * k - 3 * n - 6) * (math.factorial(k) * math.factorial(n - k + 1)) ** 2, math.factorial(n) ** 2)


def t1_antidifference_printed(n: int, k: int) -> Fraction:
    """G(n, k) literally as printed, valid for 0 <= k <= n."""
    return Fraction((2 * k - 3 * n - 6) * (k - n - 1) ** 2) / binomial(n, k) ** 2


def t1_fixture() -> CertificateFixture[Fraction]:
    F = BivariateTerm(_t1_summand, lambda n, k: 0 <= k <= n, "F")
    G = BivariateTerm(_t1_antidifference, lambda n, k: 0 <= k <= n + 1, "G")

    def lead(n):
        return Fraction((4 * n + 10) * (n + 1) ** 2)

    printed = Certificate(F, G, lead, lambda n: Fraction(-((n + 2) ** 2)))
    reconciled = Certificate(F, G, lead, lambda n: Fraction(-((n + 2) ** 3)))
    return CertificateFixture(
        "t1",
        printed,
        {"reconciled": reconciled},
        "erratum: the printed coefficient -(n+2)^2 of F(n,k) fails; -(n+2)^3 satisfies "
        "the certificate equation and the recurrence for the sum",
    )


def _t2_summand(exponent: Callable[[int], int]):
    def fn(n: int, k: int) -> QRational:
        return QRational(q_monomial(exponent(k)), gauss_binomial(n, k))

    return fn


def _t2_antidifference(n: int, k: int) -> QRational:
    # q^{n+1}(1-q^{n-k+1}) q^{-k(k-1)/2} / [n,k]_q with (1-q^{n-k+1})(q;q)_{n-k} = (q;q)_{n-k+1}
    num = q_monomial(n + 1 - k * (k - 1) // 2) * q_pochhammer(1, 1, k) * q_pochhammer(1, 1, n - k + 1)
    return QRational(num, q_pochhammer(1, 1, n))


def t2_antidifference_printed(n: int, k: int) -> QRational:
    """G(n, k) literally as printed, valid for 0 <= k <= n."""
    num = q_monomial(n + 1) * (1 - q_monomial(n - k + 1)) * q_monomial(-k * (k - 1) // 2)
    return QRational(num, gauss_binomial(n, k))


def t2_lead(n: int) -> QRational:
    return QRational((q_monomial(n + 1) - 1) * (q_monomial(n + 1) + 1))


def t2_tail(n: int) -> QRational:
    return QRational(1 - q_monomial(n + 2))


def t2_fixture() -> CertificateFixture[QRational]:
    G = BivariateTerm(_t2_antidifference, lambda n, k: 0 <= k <= n + 1, "G")
    support = lambda n, k: 0 <= k <= n  # noqa: E731
    F = BivariateTerm(_t2_summand(lambda k: -k * (k - 1) // 2), support, "F")
    F_alt = BivariateTerm(_t2_summand(lambda k: -k * (k - 1)), support, "F")
    return CertificateFixture(
        "t2",
        Certificate(F, G, t2_lead, t2_tail),
        {"summand-exponent -k(k-1)": Certificate(F_alt, G, t2_lead, t2_tail)},
        "summand exponent -k(k-1)/2 is the one the certificate supports; "
        "the variant -k(k-1) is checked for contrast",
    )
