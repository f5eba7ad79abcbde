"""Brute-force left sides against incremental evaluation of the representation."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .exact import SqrtPiScaled
from .identities.registry import IdentityCase, get_case
from .qalgebra import QRational
from .recurrence import IndefiniteSumRep, OpCounter

BENCH_CASES = ("rockett", "t1", "t2")


def digit_count(x) -> int:
    """Decimal digits needed to write ``x`` exactly (numerators plus denominators)."""
    if isinstance(x, SqrtPiScaled):
        x = x.coeff
    if isinstance(x, QRational):
        return sum(len(str(abs(c))) for c in (*x.num.coeffs, *x.den.coeffs))
    x = Fraction(x)
    return len(str(abs(x.numerator))) + len(str(x.denominator))


def counted_rep(rep: IndefiniteSumRep, counter: OpCounter) -> IndefiniteSumRep:
    return IndefiniteSumRep(rep.start, counter.wrap_all(rep.g), counter.wrap_all(rep.summand), counter.wrap(rep.constant))


def incremental_ops(rep: IndefiniteSumRep) -> int:
    """Field operations spent by ``rep.values()``."""
    counter = OpCounter()
    counted_rep(rep, counter).values()
    return counter.ops


def naive_ops(rep: IndefiniteSumRep) -> int:
    """Field operations spent re-summing from scratch at every index."""
    counter = OpCounter()
    wrapped = counted_rep(rep, counter)
    for n in range(rep.start, rep.stop + 1):
        wrapped.value(n)
    return counter.ops


@dataclass(frozen=True)
class BenchRow:
    case: str
    max_index: int
    values: int
    agree: bool
    first_disagreement: int | None
    naive_seconds: float
    incremental_seconds: float
    naive_digits: int
    incremental_digits: int
    naive_resum_ops: int
    incremental_ops: int

    def to_dict(self) -> dict:
        return asdict(self)


def bench_case(case: IdentityCase | str, max_index: int) -> BenchRow:
    case = get_case(case) if isinstance(case, str) else case
    if case.printed is None or case.sweeper is not None:
        raise ValueError(f"case {case.id!r} has no parameter-free representation to bench")
    indices = range(case.first_index, max_index + 1)

    t0 = time.perf_counter()
    naive = [case.lhs(n) for n in indices]
    naive_seconds = time.perf_counter() - t0

    t0 = time.perf_counter()
    rep = case.printed(max_index)
    incremental = rep.values()[case.first_index - rep.start:]
    incremental_seconds = time.perf_counter() - t0

    bad = next((n for n, x, y in zip(indices, naive, incremental) if x != y), None)
    return BenchRow(
        case=case.id,
        max_index=max_index,
        values=len(naive),
        agree=bad is None and len(naive) == len(incremental),
        first_disagreement=bad,
        naive_seconds=naive_seconds,
        incremental_seconds=incremental_seconds,
        naive_digits=sum(map(digit_count, naive)),
        incremental_digits=sum(map(digit_count, incremental)),
        naive_resum_ops=naive_ops(rep),
        incremental_ops=incremental_ops(rep),
    )
