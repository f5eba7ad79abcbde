"""Rockett's sum and its (x, y) generalisation, the power-sum formula, the
limit of the squared sum, and the forward identities used as sanity oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..exact import PoleError, binomial
from ..recurrence import FirstOrderRec, IndefiniteSumRep

# --- Rockett -----------------------------------------------------------------


def rockett_lhs(n: int) -> Fraction:
    """sum_{k=0}^{n} C(n,k)^-1 (full range)."""
    return sum((1 / binomial(n, k) for k in range(n + 1)), Fraction(0))


def rockett_rhs(n: int) -> Fraction:
    """(n+1)/2^n sum_{j=0}^{n} 2^j/(j+1)."""
    return Fraction(n + 1, 2**n) * sum((Fraction(2**j, j + 1) for j in range(n + 1)), Fraction(0))


def rockett_printed(up_to: int) -> IndefiniteSumRep[Fraction]:
    # the j = 0 term is the constant; summand(i) is the j = i + 1 term
    g = [Fraction(n + 1, 2**n) for n in range(up_to + 1)]
    summand = [Fraction(2 ** (i + 1), i + 2) for i in range(up_to)]
    return IndefiniteSumRep(0, g, summand, Fraction(1))


def rockett_recurrence() -> FirstOrderRec[Fraction]:
    """2(n+1) S(n+1) - (n+2) S(n) = 2(n+1), S(0) = 1."""
    return FirstOrderRec(
        lead=lambda n: Fraction(2 * (n + 1)),
        tail=lambda n: Fraction(-(n + 2)),
        rhs=lambda n: Fraction(2 * (n + 1)),
        start=0,
        initial=Fraction(1),
    )


# --- weighted generalisation ---------------------------------------------------


def _check_xy(x: Fraction, y: Fraction) -> None:
    if x == 0 or y == 0:
        raise PoleError("pole: xy=0")
    if x + y == 0:
        raise PoleError("pole: x+y=0")


def remark_b_partial(n: int, x, y) -> Fraction:
    """sum_{k=0}^{n-1} C(n,k)^-1 x^k y^(n-k): the sum the recurrence is about."""
    x, y = Fraction(x), Fraction(y)
    return sum((x**k * y ** (n - k) / binomial(n, k) for k in range(n)), Fraction(0))


def remark_b_lhs(n: int, x, y) -> Fraction:
    """sum_{k=0}^{n} C(n,k)^-1 x^k y^(n-k)."""
    return remark_b_partial(n, x, y) + Fraction(x) ** n


def remark_b_prefactor(n: int, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return (x * y / (x + y)) ** n * (n + 1)


def remark_b_summand(j: int, x, y) -> Fraction:
    """((j+1) y^{j+2} + y x^{j+1}) (x+y)^j / ((xy)^{j+1} (j+1)(j+2))."""
    x, y = Fraction(x), Fraction(y)
    return ((j + 1) * y ** (j + 2) + y * x ** (j + 1)) * (x + y) ** j / ((x * y) ** (j + 1) * (j + 1) * (j + 2))


def remark_b_printed(up_to: int, x, y) -> IndefiniteSumRep[Fraction]:
    """Representation of the partial sum; the full sum adds x^n."""
    _check_xy(Fraction(x), Fraction(y))
    g = [remark_b_prefactor(n, x, y) for n in range(up_to + 1)]
    summand = [remark_b_summand(j, x, y) for j in range(up_to)]
    return IndefiniteSumRep(0, g, summand, Fraction(0))


def remark_b_rhs(n: int, x, y) -> Fraction:
    """x^n + (xy/(x+y))^n (n+1) sum_{j<n} summand(j)."""
    _check_xy(Fraction(x), Fraction(y))
    return Fraction(x) ** n + remark_b_prefactor(n, x, y) * sum(
        (remark_b_summand(j, x, y) for j in range(n)), Fraction(0)
    )


def remark_b_recurrence(x, y) -> FirstOrderRec[Fraction]:
    """(x+y)(n+1) P(n+1) - (n+2) xy P(n) = (n+1) y^{n+2} + y x^{n+1}, P(0) = 0."""
    x, y = Fraction(x), Fraction(y)
    return FirstOrderRec(
        lead=lambda n: (x + y) * (n + 1),
        tail=lambda n: -(n + 2) * x * y,
        rhs=lambda n: (n + 1) * y ** (n + 2) + y * x ** (n + 1),
        start=0,
        initial=Fraction(0),
    )


def remark_b_validity(n: int, x, y) -> str | None:
    try:
        _check_xy(Fraction(x), Fraction(y))
    except PoleError as exc:
        return str(exc)
    return None


# --- powers of reciprocals -----------------------------------------------------


def power_sum(n: int, power: int, upper: int | None = None) -> Fraction:
    """sum_{k=0}^{upper} C(n,k)^-power, upper defaulting to n."""
    upper = n if upper is None else upper
    return sum((1 / binomial(n, k) ** power for k in range(upper + 1)), Fraction(0))


def mansour_bracket(n: int, k: int) -> Fraction:
    """sum_{j=0}^{k} (-1)^j C(k,j) / (n-k+1+j)."""
    return sum((Fraction((-1) ** j * math.comb(k, j), n - k + 1 + j) for j in range(k + 1)), Fraction(0))


def mansour_rhs(n: int, power: int) -> Fraction:
    """(n+1)^power sum_{k=0}^{n} bracket(n,k)^power."""
    return (n + 1) ** power * sum((mansour_bracket(n, k) ** power for k in range(n + 1)), Fraction(0))


def mansour_range(n: int, power: int) -> str:
    """Which left range the formula reproduces: "0..n", "0..n-1", or "none"."""
    rhs = mansour_rhs(n, power)
    if rhs == power_sum(n, power):
        return "0..n"
    if rhs == power_sum(n, power, n - 1):
        return "0..n-1"
    return "none"


# --- limit of the squared sum ----------------------------------------------------


def limit_excess(n: int) -> Fraction:
    """|sum_{k=0}^{n} C(n,k)^-2 - 2|."""
    return abs(power_sum(n, 2) - 2)


def limit_bound(n: int) -> Fraction:
    return Fraction(3, n * n)


# --- forward identities ------------------------------------------------------------


def binomial_row_sum(n: int) -> tuple[int, int]:
    return sum(math.comb(n, k) for k in range(n + 1)), 2**n


def chu_vandermonde(n: int, a: int) -> tuple[int, int]:
    return sum(math.comb(n, k) * math.comb(a, k) for k in range(n + 1)), math.comb(n + a, a)


def dixon(a: int, b: int, n: int) -> tuple[int, int]:
    """sum_{k=-n}^{n} (-1)^k C(a+n,n+k) C(b+n,b+k) C(a+b,a+k) against (a+b+n)!/(a!b!n!)."""

    def c(top, bottom):
        return math.comb(top, bottom) if 0 <= bottom <= top else 0

    lhs = sum((-1) ** k * c(a + n, n + k) * c(b + n, b + k) * c(a + b, a + k) for k in range(-n, n + 1))
    f = math.factorial
    return lhs, f(a + b + n) // (f(a) * f(b) * f(n))
