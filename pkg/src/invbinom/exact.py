"""Exact scalars: rationals, sqrt(pi)-scaled values, Gamma ratios, binomials.

Rationals are :class:`fractions.Fraction`.  Everything here is exact; there is
no floating point on any path.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, singledispatch
from typing import Iterable, Protocol, TypeVar, Union

RationalLike = Union[int, Fraction]

__all__ = [
    "CoefficientField",
    "GammaRatio",
    "IrreducibleGammaError",
    "MixedExponentError",
    "PoleError",
    "SqrtPiScaled",
    "binomial",
    "binomial_param",
    "canonical",
    "gamma_ratio_reduce",
    "half_factorial",
    "one_like",
    "zero_like",
]


class PoleError(ZeroDivisionError):
    """A denominator factor vanished at the requested parameters."""


class IrreducibleGammaError(ValueError):
    """A Gamma value is left over that is neither a factorial nor a half-factorial."""


class MixedExponentError(ValueError):
    """Addition of sqrt(pi)-scaled values with different exponents."""


F = TypeVar("F", bound="CoefficientField")


class CoefficientField(Protocol):
    """What the recurrence engine and the WZ checker need from a scalar type."""

    def __add__(self: F, other: F) -> F: ...
    def __sub__(self: F, other: F) -> F: ...
    def __mul__(self: F, other: F) -> F: ...
    def __truediv__(self: F, other: F) -> F: ...
    def __neg__(self: F) -> F: ...
    def __eq__(self, other: object) -> bool: ...


# --- field helpers ---------------------------------------------------------


@singledispatch
def one_like(x):
    """Multiplicative identity of the field ``x`` lives in."""
    raise TypeError(f"no field registered for {type(x).__name__}")


@singledispatch
def zero_like(x):
    """Additive identity of the field ``x`` lives in."""
    raise TypeError(f"no field registered for {type(x).__name__}")


@singledispatch
def canonical(x) -> str:
    """Canonical text form used verbatim in reports."""
    raise TypeError(f"no canonical form for {type(x).__name__}")


@one_like.register(int)
@one_like.register(Fraction)
def _(x):
    return Fraction(1)


@zero_like.register(int)
@zero_like.register(Fraction)
def _(x):
    return Fraction(0)


@canonical.register(int)
@canonical.register(Fraction)
def _(x) -> str:
    # Fraction.__str__ already prints "p/q" and drops q == 1
    return str(Fraction(x))


# --- binomials -------------------------------------------------------------


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) for integer n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


@lru_cache(maxsize=1 << 16)
def binomial_param(a: RationalLike, j: int) -> Fraction:
    """C(a, j) = a(a-1)...(a-j+1)/j! for any rational ``a`` and integer j >= 0.

    Negative ``j`` gives 0, matching the usual convention for the lower index.
    """
    if j < 0:
        return Fraction(0)
    a = Fraction(a)
    num = Fraction(1)
    for i in range(j):
        num *= a - i
    return num / math.factorial(j)


# --- sqrt(pi)-scaled values ------------------------------------------------


@dataclass(frozen=True)
class SqrtPiScaled:
    """The number ``coeff * sqrt(pi)**exp``.

    Zero is normalised to exponent 0 and may be added to a value of any
    exponent; otherwise addition needs equal exponents.
    """

    coeff: Fraction
    exp: int = 0

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        object.__setattr__(self, "coeff", coeff)
        if coeff == 0:
            object.__setattr__(self, "exp", 0)

    @classmethod
    def of(cls, x) -> "SqrtPiScaled":
        return x if isinstance(x, cls) else cls(Fraction(x), 0)

    def _match(self, other) -> "SqrtPiScaled":
        other = SqrtPiScaled.of(other)
        if self.coeff and other.coeff and self.exp != other.exp:
            raise MixedExponentError(
                f"cannot add sqrtpi^{self.exp} and sqrtpi^{other.exp} terms"
            )
        return other

    def __add__(self, other):
        other = self._match(other)
        exp = self.exp if self.coeff else other.exp
        return SqrtPiScaled(self.coeff + other.coeff, exp)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-SqrtPiScaled.of(other))

    def __rsub__(self, other):
        return SqrtPiScaled.of(other) - self

    def __neg__(self):
        return SqrtPiScaled(-self.coeff, self.exp)

    def __mul__(self, other):
        other = SqrtPiScaled.of(other)
        return SqrtPiScaled(self.coeff * other.coeff, self.exp + other.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = SqrtPiScaled.of(other)
        if other.coeff == 0:
            raise ZeroDivisionError("division by zero SqrtPiScaled")
        return SqrtPiScaled(self.coeff / other.coeff, self.exp - other.exp)

    def __rtruediv__(self, other):
        return SqrtPiScaled.of(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return SqrtPiScaled(1) / (self ** (-e))
        return SqrtPiScaled(self.coeff**e, self.exp * e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SqrtPiScaled.of(other)
        if not isinstance(other, SqrtPiScaled):
            return NotImplemented
        return self.coeff == other.coeff and self.exp == other.exp

    def __hash__(self):
        return hash((self.coeff, self.exp))

    def is_rational(self) -> bool:
        return self.exp == 0

    def to_rational(self) -> Fraction:
        if self.exp != 0:
            raise MixedExponentError(f"sqrtpi^{self.exp} value is not rational")
        return self.coeff

    def __str__(self):
        return f"{self.coeff}*sqrtpi^{self.exp}"


@one_like.register(SqrtPiScaled)
def _(x):
    return SqrtPiScaled(1)


@zero_like.register(SqrtPiScaled)
def _(x):
    return SqrtPiScaled(0)


@canonical.register(SqrtPiScaled)
def _(x) -> str:
    return str(x)


@lru_cache(maxsize=4096)
def half_factorial(h: RationalLike) -> SqrtPiScaled:
    """Gamma(h + 1) for h in {-1/2, 0, 1/2, 1, ...}."""
    h = Fraction(h)
    if (2 * h).denominator != 1 or h < Fraction(-1, 2):
        raise ValueError(f"half_factorial is defined for h in {{-1/2, 0, 1/2, ...}}, got {h}")
    if h.denominator == 1:
        return SqrtPiScaled(Fraction(math.factorial(int(h))), 0)
    # Gamma(h+1) = h (h-1) ... (1/2) * sqrt(pi)
    coeff = Fraction(1)
    t = h
    while t > 0:
        coeff *= t
        t -= 1
    return SqrtPiScaled(coeff, 1)


# --- Gamma ratios ----------------------------------------------------------


@dataclass(frozen=True)
class GammaRatio:
    """prod Gamma(numer) / prod Gamma(denom), arguments as concrete rationals."""

    numer: tuple[Fraction, ...] = ()
    denom: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numer", tuple(Fraction(x) for x in self.numer))
        object.__setattr__(self, "denom", tuple(Fraction(x) for x in self.denom))

    @classmethod
    def factorials(cls, numer: Iterable = (), denom: Iterable = ()) -> "GammaRatio":
        """Build from factorial arguments: x! = Gamma(x + 1)."""
        return cls(tuple(Fraction(x) + 1 for x in numer), tuple(Fraction(x) + 1 for x in denom))

    def reduce(self) -> SqrtPiScaled:
        return gamma_ratio_reduce(self)


def _shift_ratio(top: Fraction, bottom: Fraction) -> Fraction:
    """Gamma(top) / Gamma(bottom) for integer top - bottom."""
    d = top - bottom
    out = Fraction(1)
    if d >= 0:
        # Gamma(b + d)/Gamma(b) = b (b+1) ... (b+d-1)
        for i in range(int(d)):
            out *= bottom + i
        return out
    den = Fraction(1)
    for i in range(int(-d)):
        f = top + i
        if f == 0:
            raise PoleError(f"pole: Gamma({bottom}) / Gamma({top}) has zero factor {top}+{i}")
        den *= f
    return out / den


def _residual(x: Fraction) -> SqrtPiScaled:
    if x > 0 and (2 * x).denominator == 1:
        return half_factorial(x - 1)
    raise IrreducibleGammaError(f"irreducible gamma: Gamma({x})")


def gamma_ratio_reduce(gr: GammaRatio) -> SqrtPiScaled:
    """Cancel Gamma arguments at integer distance, expand what is left.

    Arguments are grouped by their fractional part and paired in sorted
    order within each group; every pair collapses to a product of linear
    factors.  Leftovers must be positive integers or half-integers.
    """
    classes: dict[Fraction, tuple[list, list]] = defaultdict(lambda: ([], []))
    for x in gr.numer:
        classes[x - math.floor(x)][0].append(x)
    for x in gr.denom:
        classes[x - math.floor(x)][1].append(x)

    value = SqrtPiScaled(1)
    for _, (tops, bottoms) in sorted(classes.items()):
        tops.sort()
        bottoms.sort()
        for top, bottom in zip(tops, bottoms):
            value = value * _shift_ratio(top, bottom)
        for x in tops[len(bottoms):]:
            value = value * _residual(x)
        for x in bottoms[len(tops):]:
            value = value / _residual(x)
    return value
