import random
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invbinom.exact import SqrtPiScaled
from invbinom.identities import families as th
from invbinom.qalgebra import QRational
from invbinom.recurrence import (
    FirstOrderRec,
    IndefiniteSumRep,
    OpCounter,
    ZeroCoefficientError,
    solve_homogeneous,
    telescope,
    unroll,
    verify_representation,
)

small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero = st.builds(Fraction, st.integers(1, 9), st.integers(1, 9)) | st.builds(Fraction, st.integers(-9, -1), st.integers(1, 9))


def poly_fn(coeffs):
    return lambda n: sum((c * n**i for i, c in enumerate(coeffs)), Fraction(0))


def random_rec(rng: random.Random, start: int = 0) -> FirstOrderRec:
    # coefficients built so lead and tail never vanish on n >= 0
    a0, a1 = Fraction(rng.randint(1, 9), rng.randint(1, 5)), Fraction(rng.randint(0, 5))
    b0, b1 = -Fraction(rng.randint(1, 9), rng.randint(1, 5)), -Fraction(rng.randint(0, 5))
    c = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)]
    return FirstOrderRec(
        lead=lambda n: a0 + a1 * n,
        tail=lambda n: b0 + b1 * n,
        rhs=poly_fn(c),
        start=start,
        initial=Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    )


def test_telescope_equals_unroll_on_random_recurrences():
    rng = random.Random(20260101)
    failures = 0
    for _ in range(200):
        rec = random_rec(rng, start=rng.randint(0, 3))
        up_to = rec.start + rng.randint(0, 30)
        failures += telescope(rec, up_to).values() != unroll(rec, up_to)
    assert failures == 0


@given(nonzero, nonzero, small, small, small, st.integers(0, 20))
def test_linearity_in_rhs(a, b, c1, c2, init, up_to):
    def rec(rhs, initial):
        return FirstOrderRec(lambda n: a, lambda n: b, rhs, 0, initial)

    r1 = rec(lambda n: c1 * n, init)
    r2 = rec(lambda n: c2, Fraction(0))
    both = rec(lambda n: c1 * n + c2, init)
    assert [x + y for x, y in zip(unroll(r1, up_to), unroll(r2, up_to))] == unroll(both, up_to)


@given(nonzero, st.integers(0, 15))
def test_g_normalisation_does_not_matter(g0, up_to):
    rec = th.t1_recurrence()
    assert telescope(rec, up_to, g0=g0).values() == telescope(rec, up_to).values()


def test_zero_coefficients_are_reported():
    rec = FirstOrderRec(lambda n: Fraction(n - 2), lambda n: Fraction(1), lambda n: Fraction(1), 0, Fraction(0))
    with pytest.raises(ZeroCoefficientError):
        unroll(rec, 5)
    rec = FirstOrderRec(lambda n: Fraction(1), lambda n: Fraction(n - 1), lambda n: Fraction(1), 0, Fraction(1))
    with pytest.raises(ZeroCoefficientError):
        solve_homogeneous(rec, Fraction(1), 4)
    with pytest.raises(ZeroCoefficientError):
        solve_homogeneous(rec, Fraction(0), 4)


def test_over_sqrtpi_field():
    rep = telescope(th.t1_recurrence(lift=SqrtPiScaled), 30, g0=th.t1_prefactor(0))
    assert [v.exp for v in rep.values()] == [0] * 31
    assert [v.coeff for v in rep.values()] == unroll(th.t1_recurrence(), 30)


def test_over_qrational_field():
    rec = th.t2_recurrence()
    rep = telescope(rec, 12)
    assert rep.values() == unroll(rec, 12)
    assert rep.values()[1:] == [th.t2_lhs(n) for n in range(1, 13)]


def test_printed_prefactor_solves_homogeneous_equation():
    # the printed g and the engine's g differ by a constant factor
    engine = solve_homogeneous(th.t1_recurrence(lift=SqrtPiScaled), SqrtPiScaled(1), 40)
    printed = [th.t1_prefactor(n) for n in range(41)]
    ratios = {p / e for p, e in zip(printed, engine)}
    assert len(ratios) == 1
    engine = solve_homogeneous(th.t2_recurrence(), QRational.one(), 15)
    assert len({th.t2_prefactor(n) / e for n, e in enumerate(engine)}) == 1


def test_incremental_matches_direct_value():
    rep = th.t1_printed(200)
    values = rep.values()
    for n in random.Random(7).sample(range(201), 10):
        assert values[n] == rep.value(n)


def test_perturbed_summand_is_detected_at_its_index():
    rec = th.t1_recurrence(lift=SqrtPiScaled)
    rep = th.t1_printed(20)
    assert verify_representation(rep, rec, 20).ok
    bad = list(rep.summand)
    bad[3] = bad[3] * 2
    check = verify_representation(replace(rep, summand=bad), rec, 20)
    assert check == (False, 3)


def test_op_counts_are_linear():
    rep = telescope(th.t1_recurrence(), 100)
    counter = OpCounter()
    counted = IndefiniteSumRep(0, counter.wrap_all(rep.g), counter.wrap_all(rep.summand), counter.wrap(rep.constant))
    values = counted.values()
    assert counter.ops == 2 * 100 + 1
    assert [v.value for v in values] == rep.values()
