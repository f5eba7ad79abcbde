"""First-order inhomogeneous recurrences lead(n) f(n+1) + tail(n) f(n) = rhs(n).

Field-generic: coefficients may be Fractions, SqrtPiScaled values or
QRationals; nothing here branches on the field.  Telescoping writes the
solution as

    f(n) = g(n) * (f(start)/g(start) + sum_{i=start}^{n-1} rhs(i) / (lead(i) g(i+1)))

with g a solution of the homogeneous equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, NamedTuple, Sequence, TypeVar

from .exact import one_like, zero_like

T = TypeVar("T")

__all__ = [
    "Counted",
    "FirstOrderRec",
    "IndefiniteSumRep",
    "OpCounter",
    "RepCheck",
    "ZeroCoefficientError",
    "solve_homogeneous",
    "telescope",
    "unroll",
    "verify_representation",
]


class ZeroCoefficientError(ZeroDivisionError):
    """lead(n) vanished, or the homogeneous solution hit zero."""


@dataclass(frozen=True)
class FirstOrderRec(Generic[T]):
    """lead(n) f(n+1) + tail(n) f(n) = rhs(n) for n >= start, with f(start) = initial."""

    lead: Callable[[int], T]
    tail: Callable[[int], T]
    rhs: Callable[[int], T]
    start: int
    initial: T

    def residual(self, f: Callable[[int], T], n: int) -> T:
        return self.lead(n) * f(n + 1) + self.tail(n) * f(n) - self.rhs(n)


def _lead(rec: FirstOrderRec, n: int):
    a = rec.lead(n)
    if a == zero_like(a):
        raise ZeroCoefficientError(f"leading coefficient vanishes at n = {n}")
    return a


def unroll(rec: FirstOrderRec[T], up_to: int) -> list[T]:
    """[f(start), ..., f(up_to)] by direct forward substitution."""
    if up_to < rec.start:
        raise ValueError(f"up_to = {up_to} is below the initial index {rec.start}")
    out = [rec.initial]
    for n in range(rec.start, up_to):
        out.append((rec.rhs(n) - rec.tail(n) * out[-1]) / _lead(rec, n))
    return out


def solve_homogeneous(rec: FirstOrderRec[T], g0: T, up_to: int) -> list[T]:
    """[g(start), ..., g(up_to)] with g(start) = g0 and lead*g(n+1) + tail*g(n) = 0."""
    zero = zero_like(g0)
    if g0 == zero:
        raise ZeroCoefficientError("g0 must be nonzero")
    g = [g0]
    for n in range(rec.start, up_to):
        nxt = -rec.tail(n) * g[-1] / _lead(rec, n)
        if nxt == zero:
            raise ZeroCoefficientError(f"homogeneous solution vanishes at n = {n + 1}")
        g.append(nxt)
    return g


@dataclass
class IndefiniteSumRep(Generic[T]):
    """value(n) = g(n) * (constant + sum_{i=start}^{n-1} summand(i)).

    ``g[j]`` and ``summand[j]`` hold index ``start + j``.  ``summand`` may be
    one entry shorter than ``g``: value(n) needs summand(i) only for i < n.
    """

    start: int
    g: list[T]
    summand: list[T]
    constant: T

    @property
    def stop(self) -> int:
        """Largest index with a defined value."""
        return self.start + min(len(self.g) - 1, len(self.summand))

    def values(self) -> list[T]:
        """value(start..stop), one add and one multiply per index."""
        acc = self.constant
        out = [self.g[0] * acc]
        for g, s in zip(self.g[1:], self.summand):
            acc = acc + s
            out.append(g * acc)
        return out

    def value(self, n: int) -> T:
        if not self.start <= n <= self.stop:
            raise IndexError(f"index {n} outside [{self.start}, {self.stop}]")
        acc = self.constant
        for s in self.summand[: n - self.start]:
            acc = acc + s
        return self.g[n - self.start] * acc


def telescope(rec: FirstOrderRec[T], up_to: int, g0: T | None = None) -> IndefiniteSumRep[T]:
    """Indefinite-sum form of rec on [start, up_to].

    ``g0`` fixes the normalisation of the homogeneous solution (default: one).
    """
    if g0 is None:
        g0 = one_like(rec.initial)
    g = solve_homogeneous(rec, g0, up_to)
    summand = [rec.rhs(n) / (_lead(rec, n) * g[n - rec.start + 1]) for n in range(rec.start, up_to)]
    return IndefiniteSumRep(rec.start, g, summand, rec.initial / g0)


class RepCheck(NamedTuple):
    ok: bool
    first_failure: int | None


def verify_representation(rep: IndefiniteSumRep[T], rec: FirstOrderRec[T], up_to: int) -> RepCheck:
    """Does rep satisfy rec for every n with n + 1 <= up_to?"""
    vals = rep.values()
    last = min(up_to, rep.stop)
    for n in range(rep.start, last):
        j = n - rep.start
        if rec.lead(n) * vals[j + 1] + rec.tail(n) * vals[j] != rec.rhs(n):
            return RepCheck(False, n)
    return RepCheck(True, None)


# --- operation counting ------------------------------------------------------


@dataclass
class OpCounter:
    ops: int = 0

    def wrap(self, x) -> "Counted":
        return Counted(x, self)

    def wrap_all(self, xs: Sequence) -> list["Counted"]:
        return [Counted(x, self) for x in xs]


class Counted:
    """Field element proxy that charges every arithmetic operation to a counter."""

    __slots__ = ("value", "counter")

    def __init__(self, value: Any, counter: OpCounter):
        self.value = value
        self.counter = counter

    def _bin(self, other, op):
        self.counter.ops += 1
        other = other.value if isinstance(other, Counted) else other
        return Counted(op(self.value, other), self.counter)

    def __add__(self, other):
        return self._bin(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._bin(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._bin(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._bin(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._bin(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._bin(other, lambda x, y: y * x)

    def __truediv__(self, other):
        return self._bin(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._bin(other, lambda x, y: y / x)

    def __neg__(self):
        self.counter.ops += 1
        return Counted(-self.value, self.counter)

    def __eq__(self, other):
        other = other.value if isinstance(other, Counted) else other
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


@one_like.register(Counted)
def _(x):
    return Counted(one_like(x.value), x.counter)


@zero_like.register(Counted)
def _(x):
    return Counted(zero_like(x.value), x.counter)
