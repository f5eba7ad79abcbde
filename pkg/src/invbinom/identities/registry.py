"""Case registry and deterministic verification sweeps."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator, Sequence

from ..exact import IrreducibleGammaError, PoleError, SqrtPiScaled, canonical
from ..recurrence import FirstOrderRec, IndefiniteSumRep
from ..wz import CertificateFixture, t1_fixture, t2_fixture
from . import classical as cl
from . import families as th

# canonical parameter order in records
PARAM_ORDER = ("identity", "a", "b", "c", "x", "y", "n", "m", "power")


@dataclass(frozen=True)
class VerificationReport:
    case: str
    params: tuple[tuple[str, Any], ...]
    n: int
    lhs: str
    rhs: str
    equal: bool | None
    relation: str = "="
    skipped_reason: str | None = None
    notes: tuple[tuple[str, str], ...] = ()
    elapsed_us: int = 0

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    def sort_key(self):
        return (self.case, tuple(v for _, v in self.params), self.n)


def _params(d: dict) -> tuple[tuple[str, Any], ...]:
    return tuple((k, d[k]) for k in PARAM_ORDER if k in d)


def _plain(x):
    if isinstance(x, SqrtPiScaled) and x.exp == 0:
        return x.coeff
    return x


def _record(case, params, n, lhs, rhs, *, elapsed=0.0, notes=()) -> VerificationReport:
    lhs, rhs = _plain(lhs), _plain(rhs)
    return VerificationReport(
        case, _params(params), n, canonical(lhs), canonical(rhs), lhs == rhs,
        notes=tuple(notes), elapsed_us=int(elapsed * 1e6),
    )


def _skip(case, params, n, reason) -> VerificationReport:
    return VerificationReport(case, _params(params), n, "", "", None, skipped_reason=reason)


# --- parameter grid ------------------------------------------------------------

F = Fraction


@dataclass(frozen=True)
class Grid:
    """Deterministic parameter samples.  ``overrides`` replaces a whole axis."""

    t3_a_offsets: tuple[int, ...] = tuple(range(7))  # integer a = n + offset
    t3_a_sevenths: tuple[int, ...] = (-19, -10, -3, 5, 11, 17, 26, 40)  # a = p/7
    t3_n_slack: int = 10  # n <= m + slack
    t4_bc: tuple[Fraction, ...] = (F(1), F(2), F(3), F(4), F(5), F(3, 2), F(5, 2), F(7, 3))
    remark_b_xy: tuple[Fraction, ...] = (F(1), F(-1), F(2), F(-2), F(3), F(1, 2), F(5, 3))
    mansour_powers: tuple[int, ...] = (1, 2, 3, 4)
    limit_ns: tuple[int, ...] = (10, 50, 100, 1000)
    overrides: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)

    def axis(self, name: str, default: Sequence) -> tuple:
        return tuple(self.overrides.get(name, default))

    def t3_samples(self, max_m: int) -> list[dict]:
        ns = self.axis("n", range(0, max_m + self.t3_n_slack + 1))
        out = []
        for n in ns:
            n = int(n)
            if "a" in self.overrides:
                avals = self.overrides["a"]
            else:
                avals = [F(n + o) for o in self.t3_a_offsets] + [F(p, 7) for p in self.t3_a_sevenths]
            out.extend({"n": n, "a": F(a)} for a in sorted(set(avals)))
        return out

    def t4_samples(self) -> list[dict]:
        bs = self.axis("b", self.t4_bc)
        cs = self.axis("c", self.t4_bc)
        return [{"b": F(b), "c": F(c)} for b in sorted(set(bs)) for c in sorted(set(cs))]

    def remark_b_samples(self) -> list[dict]:
        xs = self.axis("x", self.remark_b_xy)
        ys = self.axis("y", self.remark_b_xy)
        return [{"x": F(x), "y": F(y)} for x in sorted(set(xs)) for y in sorted(set(ys))]


# --- cases -----------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCase:
    """One identity: both sides, the recurrence, how to sample and sweep it."""

    id: str
    title: str
    index: str
    first_index: int
    sum_range: str
    default_max: int
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    printed: Callable[..., IndefiniteSumRep] | None = None
    recurrence: Callable[..., FirstOrderRec] | None = None
    validity: Callable[..., str | None] | None = None
    first_pole: Callable[..., tuple[int, str] | None] | None = None
    sampler: Callable[[int, Grid], list[dict]] = lambda max_index, grid: [{}]
    certificate: Callable[[], CertificateFixture] | None = None
    sweeper: Callable[["IdentityCase", int, Grid], Iterator[VerificationReport]] | None = None

    def sweep(self, max_index: int | None = None, grid: Grid | None = None) -> list[VerificationReport]:
        max_index = self.default_max if max_index is None else max_index
        grid = Grid() if grid is None else grid
        run = self.sweeper or sweep_printed
        return sorted(run(self, max_index, grid), key=VerificationReport.sort_key)


def sweep_printed(case: IdentityCase, max_index: int, grid: Grid) -> Iterator[VerificationReport]:
    """lhs term by term against the printed representation, evaluated incrementally."""
    for params in case.sampler(max_index, grid):
        yield from _sweep_sample(case, max_index, params)


def _first_invalid(case, lo, hi, params) -> tuple[int, str] | None:
    # validity is monotone in the index: once a pole appears it stays
    if case.first_pole is not None:
        return case.first_pole(lo, hi, **params)
    if case.validity is None:
        return None
    for idx in range(lo, hi + 1):
        reason = case.validity(idx, **params)
        if reason:
            return idx, reason
    return None


def _sweep_sample(case, max_index, params, emit_from=None) -> Iterator[VerificationReport]:
    emit_from = case.first_index if emit_from is None else emit_from
    bad = _first_invalid(case, case.first_index, max_index, params)
    last_valid = max_index if bad is None else bad[0] - 1
    if last_valid >= case.first_index:
        t0 = time.perf_counter()
        values = case.printed(last_valid, **params).values()
        per_value = (time.perf_counter() - t0) / len(values)
        for idx in range(max(emit_from, case.first_index), last_valid + 1):
            t0 = time.perf_counter()
            lhs = case.lhs(idx, **params)
            yield _record(case.id, params, idx, lhs, values[idx], elapsed=time.perf_counter() - t0 + per_value)
    if bad is not None:
        for idx in range(max(emit_from, bad[0]), max_index + 1):
            yield _skip(case.id, params, idx, bad[1])


def _sweep_t3(case, max_m, grid):
    """m <= max_m with n <= m + slack; samples with m > n + 1 hit a pole and are skipped."""
    for params in grid.t3_samples(max_m):
        lo = max(1, params["n"] - grid.t3_n_slack)
        if lo <= max_m:
            yield from _sweep_sample(case, max_m, params, emit_from=lo)


def _sweep_t4(case, max_n, grid):
    """Compare in units of 1/C(b+c,b); report true values when that unit reduces."""
    for params in grid.t4_samples():
        b, c = params["b"], params["c"]
        try:
            unit = th.t4_unit(b, c)
            notes = ()
        except IrreducibleGammaError:
            unit = None
            notes = (("unit", "1/binom(b+c,b)"),)
        first_reason = th.t4_first_pole(1, max_n, b, c)
        last_valid = max_n if first_reason is None else first_reason[0] - 1
        if last_valid >= 1:
            values = th.t4_printed_scaled(last_valid, b, c).values()
            for n in range(1, last_valid + 1):
                t0 = time.perf_counter()
                lhs, rhs = th.t4_lhs_scaled(n, b, c), values[n]
                if unit is not None:
                    lhs, rhs = unit * lhs, unit * rhs
                yield _record("t4", params, n, lhs, rhs, elapsed=time.perf_counter() - t0, notes=notes)
        if first_reason is not None:
            for n in range(first_reason[0], max_n + 1):
                yield _skip("t4", params, n, first_reason[1])


def _sweep_remark_b(case, max_n, grid):
    for params in grid.remark_b_samples():
        x, y = params["x"], params["y"]
        reason = cl.remark_b_validity(0, x, y)
        if reason:
            for n in range(max_n + 1):
                yield _skip("remark_b", params, n, reason)
            continue
        rep = cl.remark_b_printed(max_n, x, y)
        values = rep.values()
        rec = cl.remark_b_recurrence(x, y)
        partial_next = cl.remark_b_partial(0, x, y)
        for n in range(max_n + 1):
            t0 = time.perf_counter()
            partial, partial_next = partial_next, cl.remark_b_partial(n + 1, x, y)
            lhs = partial + x**n
            rhs = x**n + values[n]
            rec_ok = rec.lead(n) * partial_next + rec.tail(n) * partial == rec.rhs(n)
            r = _record(
                "remark_b", params, n, lhs, rhs, elapsed=time.perf_counter() - t0,
                notes=(("recurrence", "holds on sum_{k<n}" if rec_ok else "fails on sum_{k<n}"),),
            )
            if not rec_ok:
                r = VerificationReport(**{**r.__dict__, "equal": False})
            yield r


def _sweep_mansour(case, max_n, grid):
    for power in grid.mansour_powers:
        for n in range(1, max_n + 1):
            t0 = time.perf_counter()
            lhs, rhs = cl.power_sum(n, power), cl.mansour_rhs(n, power)
            rng = cl.mansour_range(n, power)
            yield _record(
                "mansour", {"power": power}, n, lhs, rhs,
                elapsed=time.perf_counter() - t0, notes=(("lhs_range", rng),),
            )


def limit_records(ns: Sequence[int]) -> list[VerificationReport]:
    out = []
    for n in ns:
        if n < 4:
            raise ValueError(f"limit check needs n >= 4, got {n}")
        t0 = time.perf_counter()
        excess, bound = cl.limit_excess(n), cl.limit_bound(n)
        out.append(
            VerificationReport(
                "limit", (), n, canonical(excess), canonical(bound), excess <= bound,
                relation="<=", notes=(("quantity", "|sum_{k=0}^{n} C(n,k)^-2 - 2|"),),
                elapsed_us=int((time.perf_counter() - t0) * 1e6),
            )
        )
    return out


def _sweep_limit(case, max_n, grid):
    ns = [n for n in grid.limit_ns if n <= max_n] or [max(4, max_n)]
    return limit_records(ns)


def forward_records(max_n: int = 30) -> list[VerificationReport]:
    out = []

    def rec(params, n, pair, name):
        lhs, rhs = pair
        return VerificationReport(
            "forward", _params(params), n, str(lhs), str(rhs), lhs == rhs, notes=(("identity", name),)
        )

    for n in range(min(max_n, 30) + 1):
        out.append(rec({"identity": "binomial"}, n, cl.binomial_row_sum(n), "binomial"))
    for a in range(11):
        for n in range(min(max_n, 15) + 1):
            out.append(rec({"identity": "chu-vandermonde", "a": a}, n, cl.chu_vandermonde(n, a), "chu-vandermonde"))
    for a in range(7):
        for b in range(7):
            for n in range(min(max_n, 6) + 1):
                out.append(rec({"identity": "dixon", "a": a, "b": b}, n, cl.dixon(a, b, n), "dixon"))
    return out


def _sweep_forward(case, max_n, grid):
    return forward_records(max_n)


CASES: dict[str, IdentityCase] = {
    c.id: c
    for c in [
        IdentityCase(
            "t1", "sum_{k<n} C(n,k)^-2", "n", 1, "0..n-1", 200,
            lhs=th.t1_lhs, rhs=th.t1_rhs, printed=th.t1_printed,
            recurrence=th.t1_recurrence, certificate=t1_fixture,
        ),
        IdentityCase(
            "t2", "sum_{k<n} q^{-k(k-1)/2} / [n,k]_q", "n", 1, "0..n-1", 40,
            lhs=th.t2_lhs, rhs=th.t2_rhs, printed=th.t2_printed,
            recurrence=th.t2_recurrence, certificate=t2_fixture,
        ),
        IdentityCase(
            "t3", "sum_{k<m} C(m,k)^-1 C(a,n-k)^-1", "m", 1, "0..m-1", 25,
            lhs=th.t3_lhs, rhs=th.t3_rhs, printed=th.t3_printed,
            recurrence=th.t3_recurrence, validity=th.t3_validity,
            first_pole=th.t3_first_pole, sweeper=_sweep_t3,
        ),
        IdentityCase(
            "t4", "sum_{k<n} (-1)^k C(n+b,n+k)^-1 C(n+c,c+k)^-1 C(b+c,b+k)^-1", "n", 1, "0..n-1", 20,
            lhs=th.t4_lhs, rhs=th.t4_rhs, printed=th.t4_printed_scaled,
            recurrence=th.t4_recurrence_scaled, validity=th.t4_validity,
            first_pole=th.t4_first_pole, sweeper=_sweep_t4,
        ),
        IdentityCase(
            "rockett", "sum_{k<=n} C(n,k)^-1", "n", 0, "0..n", 500,
            lhs=cl.rockett_lhs, rhs=cl.rockett_rhs, printed=cl.rockett_printed,
            recurrence=cl.rockett_recurrence,
        ),
        IdentityCase(
            "remark_b", "sum_{k<=n} C(n,k)^-1 x^k y^(n-k)", "n", 0, "0..n", 50,
            lhs=cl.remark_b_lhs, rhs=cl.remark_b_rhs, printed=cl.remark_b_printed,
            recurrence=cl.remark_b_recurrence, validity=cl.remark_b_validity,
            sweeper=_sweep_remark_b,
        ),
        IdentityCase(
            "mansour", "sum_{k<=n} C(n,k)^-power", "n", 1, "0..n", 12,
            lhs=cl.power_sum, rhs=cl.mansour_rhs, sweeper=_sweep_mansour,
        ),
        IdentityCase(
            "limit", "|sum_{k<=n} C(n,k)^-2 - 2| <= 3/n^2", "n", 4, "0..n", 1000,
            lhs=cl.limit_excess, rhs=cl.limit_bound, sweeper=_sweep_limit,
        ),
        IdentityCase(
            "forward", "binomial, Chu-Vandermonde, Dixon", "n", 0, "-", 30,
            lhs=lambda n: None, rhs=lambda n: None, sweeper=_sweep_forward,
        ),
    ]
}


def get_case(case_id: str) -> IdentityCase:
    try:
        return CASES[case_id]
    except KeyError:
        raise KeyError(f"unknown case {case_id!r}; known: {', '.join(CASES)}") from None


def verify(case_ids: Sequence[str], max_index: int | None = None, grid: Grid | None = None) -> list[VerificationReport]:
    records = []
    for cid in case_ids:
        records.extend(get_case(cid).sweep(max_index, grid))
    order = {cid: i for i, cid in enumerate(CASES)}
    records.sort(key=lambda r: (order[r.case],) + r.sort_key()[1:])
    return records


__all__ = [
    "CASES",
    "Grid",
    "IdentityCase",
    "PoleError",
    "VerificationReport",
    "forward_records",
    "get_case",
    "limit_records",
    "sweep_printed",
    "verify",
]
