"""The four reciprocal sums and their almost-closed-form right-hand sides.

Each sum S has three evaluators:

* ``*_lhs``: the sum itself, term by term;
* ``*_printed``: the right-hand side as an :class:`IndefiniteSumRep` built
  from the published prefactor g and summand, evaluated incrementally;
* ``*_recurrence``: the first-order recurrence S satisfies, for unrolling
  and telescoping.

Every printed summand has the shape rhs(i) / (g(i) * (-tail(i))), which is
rhs(i) / (lead(i) g(i+1)): the same convention the telescoping engine uses.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact import (
    GammaRatio,
    PoleError,
    SqrtPiScaled,
    binomial,
    binomial_param,
)
from ..qalgebra import QRational, gauss_binomial, q_monomial, q_pochhammer
from ..recurrence import FirstOrderRec, IndefiniteSumRep
from ..wz import t2_lead, t2_tail

HALF = Fraction(1, 2)


def _sum(terms, start=Fraction(0)):
    acc = start
    for t in terms:
        acc = acc + t
    return acc


# --- squared reciprocals -----------------------------------------------------


def t1_lhs(n: int) -> Fraction:
    """sum_{k=0}^{n-1} C(n,k)^-2."""
    return _sum(1 / binomial(n, k) ** 2 for k in range(n))


def t1_prefactor(n: int) -> SqrtPiScaled:
    """(n+1)! (n+1)^2 / ((n+3/2)! 4^n), carries sqrt(pi)^-1."""
    gr = GammaRatio.factorials([n + 1], [n + 3 * HALF])
    return gr.reduce() * Fraction((n + 1) ** 2, 4**n)


def t1_summand(j: int) -> SqrtPiScaled:
    """(3j^3+12j^2+18j+10) 4^j (j+3/2)! / ((j+1)^2 (j+1)! (j+2)^3), carries sqrt(pi)."""
    poly = 3 * j**3 + 12 * j**2 + 18 * j + 10
    gr = GammaRatio.factorials([j + 3 * HALF], [j + 1])
    return gr.reduce() * Fraction(poly * 4**j, (j + 1) ** 2 * (j + 2) ** 3)


def t1_printed(up_to: int) -> IndefiniteSumRep[SqrtPiScaled]:
    g = [t1_prefactor(n) for n in range(up_to + 1)]
    summand = [t1_summand(j) for j in range(up_to)]
    return IndefiniteSumRep(0, g, summand, SqrtPiScaled(0))


def t1_rhs(n: int) -> Fraction:
    """Printed right side at one n; the sqrt(pi) powers must cancel."""
    return (t1_prefactor(n) * _sum((t1_summand(j) for j in range(n)), SqrtPiScaled(0))).to_rational()


def t1_recurrence(tail_power: int = 3, lift=Fraction) -> FirstOrderRec:
    """(4n+10)(n+1)^2 S(n+1) - (n+2)^tail_power S(n) = 3n^3+12n^2+18n+10, S(0) = 0.

    ``tail_power=3`` is the form the sums satisfy; 2 is the printed one.
    ``lift`` maps integers into the target field.
    """
    return FirstOrderRec(
        lead=lambda n: lift((4 * n + 10) * (n + 1) ** 2),
        tail=lambda n: lift(-((n + 2) ** tail_power)),
        rhs=lambda n: lift(3 * n**3 + 12 * n**2 + 18 * n + 10),
        start=0,
        initial=lift(0),
    )


def squared_sum_step(n: int, prev: Fraction) -> Fraction:
    """S(n) from S(n-1) by 2S(n) = ((n+1)^3 S(n-1) + 3n^3+3n^2+3n+1) / (2n^3+3n^2)."""
    den = 2 * n**3 + 3 * n**2
    return (Fraction((n + 1) ** 3, den) * prev + Fraction(3 * n**3 + 3 * n**2 + 3 * n + 1, den)) / 2


# --- q-binomial --------------------------------------------------------------


def t2_lhs(n: int) -> QRational:
    """sum_{k=0}^{n-1} q^{-k(k-1)/2} / [n,k]_q."""
    return _sum(
        (QRational(q_monomial(-k * (k - 1) // 2), gauss_binomial(n, k)) for k in range(n)),
        QRational.zero(),
    )


def _half_exp(num: int) -> int:
    if num % 2:
        raise ArithmeticError(f"odd exponent numerator {num}")
    return num // 2


def t2_rhs_term(i: int) -> QRational:
    """The printed C(i): an eight-term Laurent numerator over q^{i+1} - 1."""
    m = q_monomial
    num = (
        m(i + 1)
        + m(3 * (i + 1))
        + m(_half_exp(-i * (i - 1)))
        + m(_half_exp(-(i + 1) * (i - 4)))
        - m(_half_exp(2 + 3 * i - i * i))
        - m(_half_exp(-(i + 1) * (i - 2)))
        - 2 * m(2 * (i + 1))
    )
    return QRational(num, m(i + 1) - 1)


def t2_prefactor(n: int) -> QRational:
    """(q^2;q)_n / (q^2;q^2)_n."""
    return QRational(q_pochhammer(2, 1, n), q_pochhammer(2, 2, n))


def t2_summand(i: int) -> QRational:
    """C(i) (q^2;q^2)_i / ((q^2;q)_i (q^{i+2} - 1))."""
    return t2_rhs_term(i) * QRational(q_pochhammer(2, 2, i), q_pochhammer(2, 1, i) * (q_monomial(i + 2) - 1))


def t2_printed(up_to: int) -> IndefiniteSumRep[QRational]:
    g = [t2_prefactor(n) for n in range(up_to + 1)]
    summand = [t2_summand(i) for i in range(up_to)]
    return IndefiniteSumRep(0, g, summand, QRational.zero())


def t2_rhs(n: int) -> QRational:
    return t2_prefactor(n) * _sum((t2_summand(i) for i in range(n)), QRational.zero())


def t2_recurrence() -> FirstOrderRec[QRational]:
    """(q^{n+1}-1)(q^{n+1}+1) S(n+1) - (q^{n+2}-1) S(n) = C(n), S(0) = 0."""
    return FirstOrderRec(t2_lead, t2_tail, t2_rhs_term, 0, QRational.zero())


# --- reciprocal Chu-Vandermonde ---------------------------------------------
# index m, parameters n (integer) and a (rational)


def t3_lhs(m: int, n: int, a) -> Fraction:
    """sum_{k=0}^{m-1} C(m,k)^-1 C(a,n-k)^-1."""
    a = Fraction(a)
    total = Fraction(0)
    for k in range(m):
        den = binomial(m, k) * binomial_param(a, n - k)
        if den == 0:
            raise PoleError(f"pole: binom(a,n-k)=0 at k={k}")
        total += 1 / den
    return total


def t3_prefactor(m: int, n: int, a) -> Fraction:
    """(a+m-n+1)! (a+4)! (m+1) / (2 (a+m+3)! (a-n+2)!)."""
    a = Fraction(a)
    gr = GammaRatio.factorials([a + m - n + 1, a + 4], [a + m + 3, a - n + 2])
    return gr.reduce().to_rational() * Fraction(m + 1, 2)


def t3_rhs_term(i: int, n: int, a) -> Fraction:
    """(n+i+in+1)/C(a,n) + (2i+a-n+3)/C(a,n-i)."""
    a = Fraction(a)
    c_n = binomial_param(a, n)
    c_ni = binomial_param(a, n - i)
    if c_n == 0:
        raise PoleError("pole: binom(a,n)=0")
    if c_ni == 0:
        raise PoleError(f"pole: binom(a,n-i)=0 at i={i}")
    return (n + i + i * n + 1) / c_n + (2 * i + a - n + 3) / c_ni


def t3_summand(i: int, n: int, a, g_i: Fraction | None = None) -> Fraction:
    a = Fraction(a)
    factor = a + i - n + 2
    if factor == 0:
        raise PoleError(f"pole: a+i-n+2=0 at i={i}")
    g_i = t3_prefactor(i, n, a) if g_i is None else g_i
    if g_i == 0:
        raise PoleError(f"pole: g(i)=0 at i={i}")
    return t3_rhs_term(i, n, a) / (g_i * (i + 2) * factor)


def t3_printed(up_to: int, n: int, a) -> IndefiniteSumRep[Fraction]:
    g = [t3_prefactor(m, n, a) for m in range(up_to + 1)]
    summand = [t3_summand(i, n, a, g[i]) for i in range(up_to)]
    return IndefiniteSumRep(0, g, summand, Fraction(0))


def t3_rhs(m: int, n: int, a) -> Fraction:
    return t3_prefactor(m, n, a) * _sum(t3_summand(i, n, a) for i in range(m))


def t3_recurrence(n: int, a) -> FirstOrderRec[Fraction]:
    """(a+m+4)(m+1) S(m+1) - (m+2)(a+m-n+2) S(m) = C(m), S(0) = 0."""
    a = Fraction(a)
    return FirstOrderRec(
        lead=lambda m: (a + m + 4) * (m + 1),
        tail=lambda m: -(m + 2) * (a + m - n + 2),
        rhs=lambda m: t3_rhs_term(m, n, a),
        start=0,
        initial=Fraction(0),
    )


def t3_validity(m: int, n: int, a) -> str | None:
    """Reason the sample (m, n, a) hits a pole, or None."""
    a = Fraction(a)
    for k in range(m):
        if binomial_param(a, n - k) == 0:
            return f"pole: binom(a,n-k)=0 at k={k}"
    for i in range(m):
        if a + i - n + 2 == 0:
            return f"pole: a+i-n+2=0 at i={i}"
    for i in range(m + 1):
        try:
            if t3_prefactor(i, n, a) == 0:
                return f"pole: g(i)=0 at i={i}"
        except PoleError:
            return f"pole: g(i) undefined at i={i}"
    if m and binomial_param(a, n) == 0:
        return "pole: binom(a,n)=0"
    return None


def t3_first_pole(lo: int, hi: int, n: int, a) -> tuple[int, str] | None:
    """Smallest m in [lo, hi] with t3_validity(m) set, scanning each factor once."""
    a = Fraction(a)
    if t3_validity(lo, n, a):
        return lo, t3_validity(lo, n, a)
    for m in range(lo + 1, hi + 1):
        k = i = m - 1
        if binomial_param(a, n - k) == 0:
            return m, f"pole: binom(a,n-k)=0 at k={k}"
        if a + i - n + 2 == 0:
            return m, f"pole: a+i-n+2=0 at i={i}"
        try:
            if t3_prefactor(m, n, a) == 0:
                return m, f"pole: g(i)=0 at i={m}"
        except PoleError:
            return m, f"pole: g(i) undefined at i={m}"
    return None


# --- reciprocal Dixon --------------------------------------------------------
# index n, parameters b, c.  Every term carries the common factor
# U = 1/C(b+c,b) = Gamma(b+1)Gamma(c+1)/Gamma(b+c+1); values are computed as
# exact rationals in units of U and multiplied by U only when U reduces.


def t4_unit(b, c) -> SqrtPiScaled:
    """1/C(b+c, b); raises IrreducibleGammaError if it is not a sqrt(pi) multiple."""
    b, c = Fraction(b), Fraction(c)
    return GammaRatio([b + 1, c + 1], [b + c + 1]).reduce()


def _inv_bc(k: int, b: Fraction, c: Fraction) -> Fraction:
    """C(b+c, b+k)^-1 / U."""
    try:
        return GammaRatio([b + k + 1, c - k + 1], [b + 1, c + 1]).reduce().to_rational()
    except PoleError:
        raise PoleError(f"pole: binom(b+c,b+k)=0 at k={k}") from None


def _nonzero(x: Fraction, reason: str) -> Fraction:
    if x == 0:
        raise PoleError(reason)
    return x


def t4_lhs_scaled(n: int, b, c) -> Fraction:
    b, c = Fraction(b), Fraction(c)
    total = Fraction(0)
    for k in range(n):
        d1 = _nonzero(binomial_param(n + b, n + k), f"pole: binom(n+b,n+k)=0 at k={k}")
        # C(n+c, c+k) = C(n+c, n-k)
        d2 = _nonzero(binomial_param(n + c, n - k), f"pole: binom(n+c,c+k)=0 at k={k}")
        total += (-1) ** k * _inv_bc(k, b, c) / (d1 * d2)
    return total


def t4_prefactor(n: int, b, c) -> Fraction:
    """(b+n+1)(c+n+1)(b+c+2)! n! / ((b+1)(c+1)(b+c+n+2)!)."""
    b, c = Fraction(b), Fraction(c)
    if (b + 1) * (c + 1) == 0:
        raise PoleError("pole: (b+1)(c+1)=0")
    gr = GammaRatio.factorials([b + c + 2, n], [b + c + n + 2])
    return gr.reduce().to_rational() * (b + n + 1) * (c + n + 1) / ((b + 1) * (c + 1))


def t4_rhs_term_scaled(i: int, b, c) -> Fraction:
    """The printed C(i) in units of 1/C(b+c,b)."""
    b, c = Fraction(b), Fraction(c)
    poly = 3 * b * i + 3 * c * i + b * c + 3 * b + 5 * i**2 + 12 * i + 3 * c + 7
    d1 = _nonzero(binomial_param(i + b, 2 * i), f"pole: binom(i+b,2i)=0 at i={i}")
    first = (-1) ** i * poly * _inv_bc(i, b, c) / d1
    d2 = _nonzero(binomial_param(i + b, i), f"pole: binom(i+b,i)=0 at i={i}")
    # C(i+c, c) = C(i+c, i)
    d3 = _nonzero(binomial_param(i + c, i), f"pole: binom(i+c,c)=0 at i={i}")
    return first - (b + 1) * (c + 1) * (i + 1) / (d2 * d3)


def t4_summand_scaled(i: int, b, c, g_i: Fraction | None = None) -> Fraction:
    b, c = Fraction(b), Fraction(c)
    factor = (2 * i + 2) * (c + i + 2) * (b + i + 2)
    if factor == 0:
        raise PoleError(f"pole: (2i+2)(c+i+2)(b+i+2)=0 at i={i}")
    g_i = t4_prefactor(i, b, c) if g_i is None else g_i
    if g_i == 0:
        raise PoleError(f"pole: g(i)=0 at i={i}")
    return t4_rhs_term_scaled(i, b, c) / (g_i * factor)


def t4_printed_scaled(up_to: int, b, c) -> IndefiniteSumRep[Fraction]:
    g = [t4_prefactor(n, b, c) for n in range(up_to + 1)]
    summand = [t4_summand_scaled(i, b, c, g[i]) for i in range(up_to)]
    return IndefiniteSumRep(0, g, summand, Fraction(0))


def t4_rhs_scaled(n: int, b, c) -> Fraction:
    return t4_prefactor(n, b, c) * _sum(t4_summand_scaled(i, b, c) for i in range(n))


def _unscale(x: Fraction, b, c):
    v = t4_unit(b, c) * x
    return v.coeff if v.exp == 0 else v


def t4_lhs(n: int, b, c):
    """sum_{k=0}^{n-1} (-1)^k C(n+b,n+k)^-1 C(n+c,c+k)^-1 C(b+c,b+k)^-1.

    A Fraction when 1/C(b+c,b) is rational, a SqrtPiScaled when it is a
    power-of-pi multiple; IrreducibleGammaError otherwise (use the
    ``*_scaled`` variants there).
    """
    return _unscale(t4_lhs_scaled(n, b, c), b, c)


def t4_rhs(n: int, b, c):
    return _unscale(t4_rhs_scaled(n, b, c), b, c)


def t4_recurrence_scaled(b, c) -> FirstOrderRec[Fraction]:
    """2(c+n+1)(b+n+1)(b+c+n+3) S(n+1) - 2(n+1)(c+n+2)(b+n+2) S(n) = C(n), S(0) = 0."""
    b, c = Fraction(b), Fraction(c)
    return FirstOrderRec(
        lead=lambda n: 2 * (c + n + 1) * (b + n + 1) * (b + c + n + 3),
        tail=lambda n: -2 * (n + 1) * (c + n + 2) * (b + n + 2),
        rhs=lambda n: t4_rhs_term_scaled(n, b, c),
        start=0,
        initial=Fraction(0),
    )


def t4_validity(n: int, b, c) -> str | None:
    b, c = Fraction(b), Fraction(c)
    try:
        t4_lhs_scaled(n, b, c)
        for i in range(n + 1):
            if t4_prefactor(i, b, c) == 0:
                return f"pole: g(i)=0 at i={i}"
        for i in range(n):
            t4_summand_scaled(i, b, c)
    except PoleError as exc:
        return str(exc)
    return None


def t4_first_pole(lo: int, hi: int, b, c) -> tuple[int, str] | None:
    """Smallest n in [lo, hi] with t4_validity(n) set.

    Only the left sum depends on n beyond prefix terms, so each step checks
    the new lhs plus the factors that enter at i = n - 1 and g(n).
    """
    b, c = Fraction(b), Fraction(c)
    reason = t4_validity(lo, b, c)
    if reason:
        return lo, reason
    for n in range(lo + 1, hi + 1):
        try:
            t4_lhs_scaled(n, b, c)
            if t4_prefactor(n, b, c) == 0:
                return n, f"pole: g(i)=0 at i={n}"
            t4_summand_scaled(n - 1, b, c)
        except PoleError as exc:
            return n, str(exc)
    return None
