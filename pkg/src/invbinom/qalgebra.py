"""Laurent polynomials in q over Z and their canonical quotients.

A :class:`LaurentPoly` is ``q**val * (c0 + c1 q + ...)`` with ``c0 != 0`` and
the last coefficient nonzero; the zero polynomial has no coefficients.  A
:class:`QRational` is always kept in canonical form, so equality is
structural.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping

from . import _intpoly as ip
from .exact import canonical, one_like, zero_like

__all__ = [
    "LaurentPoly",
    "QRational",
    "canonicalize",
    "gauss_binomial",
    "gauss_binomial_product",
    "q_monomial",
    "q_pochhammer",
]


class LaurentPoly:
    __slots__ = ("val", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), val: int = 0):
        cs = ip.trim([int(c) for c in coeffs])
        lead_zeros = 0
        while lead_zeros < len(cs) and cs[lead_zeros] == 0:
            lead_zeros += 1
        cs = cs[lead_zeros:]
        self.coeffs: tuple[int, ...] = tuple(cs)
        self.val: int = val + lead_zeros if cs else 0

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls([c])

    def terms(self) -> dict[int, int]:
        """Exponent -> coefficient, nonzero entries only."""
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        return self.val

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return self.val + len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _aligned(self, other: "LaurentPoly") -> tuple[list[int], list[int], int]:
        if not self.coeffs:
            return [], list(other.coeffs), other.val
        if not other.coeffs:
            return list(self.coeffs), [], self.val
        lo = min(self.val, other.val)
        return (
            ip.shift(list(self.coeffs), self.val - lo),
            ip.shift(list(other.coeffs), other.val - lo),
            lo,
        )

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        f, g, lo = self._aligned(other)
        return LaurentPoly(ip.add(f, g), lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(ip.neg(list(self.coeffs)), self.val)

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(ip.mul(list(self.coeffs), list(other.coeffs)), self.val + other.val)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            # only the units of Z[q, 1/q] invert: +-q^k
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise ValueError("negative power of a non-monomial LaurentPoly; use QRational")
            return LaurentPoly([self.coeffs[0] ** -e], self.val * e)
        out, base = LaurentPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly(self.coeffs, self.val + k) if self.coeffs else self

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs and self.val == other.val

    def __hash__(self):
        return hash((self.val, self.coeffs))

    def __call__(self, q) -> Fraction:
        """Evaluate at a nonzero rational q."""
        q = Fraction(q)
        if self.val < 0 and q == 0:
            raise ZeroDivisionError("negative power of q at q = 0")
        return ip.evaluate_fraction(list(self.coeffs), q) * q**self.val

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly([x])
    return NotImplemented


def q_monomial(e: int) -> LaurentPoly:
    return LaurentPoly([1], e)


def q_pochhammer(start_exp: int, step_exp: int, n: int) -> LaurentPoly:
    """prod_{i<n} (1 - q**(start_exp + i*step_exp))."""
    if step_exp <= 0:
        raise ValueError("step_exp must be positive")
    out = LaurentPoly([1])
    for i in range(n):
        out = out * (1 - q_monomial(start_exp + i * step_exp))
    return out


_pascal_lock = threading.Lock()
_pascal_rows: list[list[LaurentPoly]] = [[LaurentPoly([1])]]


def gauss_binomial(n: int, k: int) -> LaurentPoly:
    """[n, k]_q by the q-Pascal rule [n,k] = [n-1,k-1] + q**k [n-1,k], memoised."""
    if n < 0:
        raise ValueError(f"gauss_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly()
    with _pascal_lock:
        rows = _pascal_rows
        while len(rows) <= n:
            prev = rows[-1]
            m = len(rows)
            row = [LaurentPoly([1])]
            for j in range(1, m):
                row.append(prev[j - 1] + prev[j].shift(j))
            row.append(LaurentPoly([1]))
            rows.append(row)
        return rows[n][k]


def gauss_binomial_product(n: int, k: int) -> LaurentPoly:
    """[n, k]_q as (q;q)_n / ((q;q)_k (q;q)_{n-k}), by exact division."""
    if k < 0 or k > n:
        return LaurentPoly()
    num = q_pochhammer(1, 1, n)
    den = q_pochhammer(1, 1, k) * q_pochhammer(1, 1, n - k)
    quot, rem = ip.divmod_exact(list(num.coeffs), list(den.coeffs))
    assert not rem
    return LaurentPoly(quot)


# --- rational functions ----------------------------------------------------


class QRational:
    """num/den in canonical form.

    ``den`` is an ordinary polynomial with nonzero constant term and positive
    leading coefficient; ``num`` may carry negative powers of q; the two share
    no polynomial factor and no integer content.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _canonical: bool = False):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QRational parts must be LaurentPoly or int")
        if not _canonical:
            num, den = _canonical_parts(num, den)
        self.num: LaurentPoly = num
        self.den: LaurentPoly = den

    @classmethod
    def of(cls, x) -> "QRational":
        if isinstance(x, QRational):
            return x
        return cls(x)

    @classmethod
    def one(cls) -> "QRational":
        return cls(LaurentPoly([1]), LaurentPoly([1]), _canonical=True)

    @classmethod
    def zero(cls) -> "QRational":
        return cls(LaurentPoly(), LaurentPoly([1]), _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_qrational(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        return QRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRational(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _as_qrational(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_qrational(other) - self

    def __mul__(self, other):
        other = _as_qrational(other)
        if other is NotImplemented:
            return other
        return QRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_qrational(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return QRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_qrational(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return QRational.one() / (self ** (-e))
        return QRational(self.num**e, self.den**e)

    def __eq__(self, other):
        other = _as_qrational(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, q) -> Fraction:
        d = self.den(q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {q}")
        return self.num(q) / d

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QRational{self}"


def _as_qrational(x):
    if isinstance(x, QRational):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return QRational(x)
    return NotImplemented


def _canonical_parts(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return LaurentPoly(), LaurentPoly([1])
    # move every power of q into the numerator, then cancel over Z[q]
    h, n, d = ip.gcd_cofactors(list(num.coeffs), list(den.coeffs))
    if d[-1] < 0:
        n, d = ip.neg(n), ip.neg(d)
    return LaurentPoly(n, num.val - den.val), LaurentPoly(d)


def canonicalize(num: LaurentPoly, den: LaurentPoly) -> QRational:
    return QRational(num, den)


@one_like.register(QRational)
def _(x):
    return QRational.one()


@zero_like.register(QRational)
def _(x):
    return QRational.zero()


@canonical.register(QRational)
def _(x) -> str:
    return str(x)


@canonical.register(LaurentPoly)
def _(x) -> str:
    return str(x)
