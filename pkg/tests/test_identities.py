from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from invbinom.exact import IrreducibleGammaError, PoleError, SqrtPiScaled
from invbinom.identities import classical as cl
from invbinom.identities import families as th
from invbinom.identities.registry import CASES, Grid, get_case, verify
from invbinom.recurrence import telescope, unroll

R = sympy.Rational


def sym(x: Fraction):
    return R(x.numerator, x.denominator)


def inv_binomial(top, bottom):
    """1/C(top, bottom) through Gamma, exact for integer and half-integer arguments."""
    return sympy.gammasimp(sympy.gamma(bottom + 1) * sympy.gamma(top - bottom + 1) / sympy.gamma(top + 1))


def sympy_t3_lhs(m, n, a):
    a = sym(Fraction(a))
    return sum(1 / (sympy.binomial(m, k) * sympy.binomial(a, n - k)) for k in range(m))


def sympy_t4_lhs(n, b, c):
    b, c = sym(Fraction(b)), sym(Fraction(c))
    return sum(
        (-1) ** k * inv_binomial(n + b, n + k) * inv_binomial(n + c, c + k) * inv_binomial(b + c, b + k)
        for k in range(n)
    )


def as_sympy(v):
    if isinstance(v, SqrtPiScaled):
        return sym(v.coeff) * sympy.sqrt(sympy.pi) ** v.exp
    return sym(Fraction(v))


# --- spot values -----------------------------------------------------------------


def test_t1_spot_values():
    assert [th.t1_lhs(n) for n in (1, 2, 3)] == [1, Fraction(5, 4), Fraction(11, 9)]
    assert [th.t1_rhs(n) for n in (1, 2, 3)] == [1, Fraction(5, 4), Fraction(11, 9)]


def test_t1_printed_sides_carry_opposite_sqrtpi_powers():
    assert th.t1_prefactor(5).exp == -1 and th.t1_summand(5).exp == 1


def test_squared_sum_rearrangement():
    s = th.t1_lhs(1)
    for n in range(2, 51):
        s = th.squared_sum_step(n, s)
        assert s == th.t1_lhs(n)


def test_t2_spot_values():
    assert str(th.t2_lhs(1)) == "(1)/(1)"
    assert str(th.t2_lhs(2)) == "(2 + q)/(1 + q)"
    assert th.t2_rhs(2) == th.t2_lhs(2)


def test_t2_at_q1_is_t1_sum_of_first_powers():
    # at q = 1 the summand degenerates to 1/C(n,k)
    for n in range(1, 10):
        assert th.t2_lhs(n)(Fraction(1)) == sum(Fraction(1) / sympy.binomial(n, k) for k in range(n))


def test_t3_spot_values_and_base_case():
    assert th.t3_lhs(1, 2, 5) == th.t3_rhs(1, 2, 5) == Fraction(1, 10)
    for n, a in [(2, 5), (3, Fraction(7, 2)), (0, Fraction(-3, 7))]:
        assert th.t3_rhs(1, n, a) == 1 / sympy_t3_lhs(1, n, a) ** -1


@pytest.mark.parametrize("n,a", [(4, 5), (8, 11), (8, Fraction(7, 2)), (8, Fraction(-10, 7)), (6, Fraction(40, 7))])
def test_t3_recurrence_against_sympy(n, a):
    rec = th.t3_recurrence(n, a)
    for m in range(1, n):
        lhs = sym(rec.lead(m)) * sympy_t3_lhs(m + 1, n, a) + sym(rec.tail(m)) * sympy_t3_lhs(m, n, a)
        assert lhs == sym(rec.rhs(m))


def test_t3_recurrence_residual_example():
    rec = th.t3_recurrence(2, 5)
    residual = sym(rec.lead(1)) * sympy_t3_lhs(2, 2, 5) + sym(rec.tail(1)) * sympy_t3_lhs(1, 2, 5)
    assert residual == R(11, 5) == sym(rec.rhs(1))


def test_t3_pole_reason():
    # a + i - n + 2 = 0 at i = 2 for (n, a) = (3, -1); C(-1, j) never vanishes
    assert th.t3_validity(3, 3, -1) == "pole: a+i-n+2=0 at i=2"
    assert th.t3_first_pole(1, 10, 3, -1) == (3, "pole: a+i-n+2=0 at i=2")
    # past m = n + 1 the lower index n - k goes negative
    assert th.t3_validity(4, 2, 5) == "pole: binom(a,n-k)=0 at k=3"


@given(st.integers(1, 12), st.integers(0, 14), st.sampled_from([F for F in map(Fraction, range(0, 20))] + [Fraction(p, 7) for p in range(-30, 50, 3)]))
def test_t3_first_pole_matches_validity(m, n, a):
    found = th.t3_first_pole(1, m, n, a)
    scan = next(((i, th.t3_validity(i, n, a)) for i in range(1, m + 1) if th.t3_validity(i, n, a)), None)
    assert found == scan


def test_t4_spot_values_and_residual():
    assert th.t4_lhs(1, 1, 1) == th.t4_rhs(1, 1, 1) == Fraction(1, 8)
    assert th.t4_lhs(2, 1, 1) == Fraction(-5, 18)
    rec = th.t4_recurrence_scaled(1, 1)
    unit = th.t4_unit(1, 1).coeff
    residual = sym(rec.lead(1)) * sympy_t4_lhs(2, 1, 1) + sym(rec.tail(1)) * sympy_t4_lhs(1, 1, 1)
    assert residual == R(-38) == sym(rec.rhs(1) * unit)


@pytest.mark.parametrize("b,c", [(1, 1), (2, 3), (Fraction(3, 2), 2), (Fraction(3, 2), Fraction(5, 2)), (4, Fraction(5, 2))])
def test_t4_against_sympy(b, c):
    for n in range(1, 6):
        try:
            mine = th.t4_lhs(n, b, c)
        except PoleError:
            continue
        assert sympy.simplify(as_sympy(mine) - sympy_t4_lhs(n, b, c)) == 0
        assert th.t4_rhs(n, b, c) == mine


def test_t4_half_integer_pair_carries_pi():
    v = th.t4_lhs(3, Fraction(3, 2), Fraction(5, 2))
    assert isinstance(v, SqrtPiScaled) and v.exp == 2


def test_t4_irreducible_unit():
    with pytest.raises(IrreducibleGammaError):
        th.t4_lhs(2, Fraction(7, 3), Fraction(3, 2))
    # the scaled form still verifies
    assert th.t4_lhs_scaled(4, Fraction(7, 3), Fraction(3, 2)) == th.t4_rhs_scaled(4, Fraction(7, 3), Fraction(3, 2))
    # Gamma arguments at integer distance cancel even when non-half-integer
    assert th.t4_unit(Fraction(7, 3), 1) == SqrtPiScaled(Fraction(3, 10))


def test_t4_scaled_recurrence_matches_unroll():
    # an integer b or c stops the range early, so only non-integer pairs run to 10
    for b, c in [(Fraction(5, 2), Fraction(7, 2)), (Fraction(7, 3), Fraction(5, 2))]:
        rec = th.t4_recurrence_scaled(b, c)
        assert unroll(rec, 10)[1:] == [th.t4_lhs_scaled(n, b, c) for n in range(1, 11)]


# --- Rockett, weighted, powers, limit ----------------------------------------------------


def test_rockett_spot_and_recurrence():
    assert cl.rockett_lhs(2) == cl.rockett_rhs(2) == Fraction(5, 2)
    assert unroll(cl.rockett_recurrence(), 40) == [cl.rockett_lhs(n) for n in range(41)]
    assert telescope(cl.rockett_recurrence(), 40).values() == cl.rockett_printed(40).values()


def test_remark_b_specialises_to_rockett():
    rep = cl.remark_b_printed(60, 1, 1).values()
    for n in range(61):
        assert cl.remark_b_lhs(n, 1, 1) == cl.rockett_lhs(n)
        assert 1 + rep[n] == cl.rockett_rhs(n) == cl.remark_b_rhs(n, 1, 1)


def test_remark_b_recurrence_holds_on_partial_sum():
    x, y = Fraction(2), Fraction(-1, 2)
    rec = cl.remark_b_recurrence(x, y)
    assert unroll(rec, 20) == [cl.remark_b_partial(n, x, y) for n in range(21)]
    # and not on the full sum
    full = [cl.remark_b_lhs(n, x, y) for n in range(3)]
    assert rec.lead(0) * full[1] + rec.tail(0) * full[0] != rec.rhs(0)


def test_remark_b_poles():
    with pytest.raises(PoleError, match="x\\+y=0"):
        cl.remark_b_rhs(3, 2, -2)
    assert cl.remark_b_validity(0, 0, 1) == "pole: xy=0"


def test_mansour_bracket_is_reciprocal_binomial():
    for n in range(8):
        for k in range(n + 1):
            assert cl.mansour_bracket(n, k) == 1 / ((n + 1) * sympy.binomial(n, k))


def test_mansour_range_is_full():
    assert {cl.mansour_range(n, p) for n in range(1, 13) for p in (1, 2, 3, 4)} == {"0..n"}
    # for power 2 the formula reproduces the full sum of the squared reciprocals
    for n in range(1, 13):
        assert cl.mansour_rhs(n, 2) == th.t1_lhs(n) + 1


def test_limit_excess_small_case():
    assert cl.limit_excess(4) == Fraction(11, 72)
    assert cl.limit_excess(10) <= cl.limit_bound(10)


@pytest.mark.parametrize("n", range(0, 12))
def test_forward_identities(n):
    assert cl.binomial_row_sum(n)[0] == cl.binomial_row_sum(n)[1]
    for a in range(6):
        lhs, rhs = cl.chu_vandermonde(n, a)
        assert lhs == rhs
    for a in range(4):
        lhs, rhs = cl.dixon(a, 2, min(n, 5))
        assert lhs == rhs


# --- registry -----------------------------------------------------------------------------


def test_registry_ids():
    assert list(CASES) == ["t1", "t2", "t3", "t4", "rockett", "remark_b", "mansour", "limit", "forward"]
    with pytest.raises(KeyError, match="unknown case"):
        get_case("t9")


def test_small_sweeps_have_no_failures():
    records = verify(list(CASES), 6, Grid(limit_ns=(10,)))
    assert records and not [r for r in records if r.equal is False]
    assert {r.case for r in records} == set(CASES)


def test_sweeps_are_deterministic():
    a = [(r.case, r.params, r.n, r.lhs, r.rhs, r.equal) for r in verify(["t3", "t4"], 5)]
    b = [(r.case, r.params, r.n, r.lhs, r.rhs, r.equal) for r in verify(["t3", "t4"], 5)]
    assert a == b


def test_grid_overrides_replace_axes():
    records = get_case("t4").sweep(3, Grid(overrides={"b": (Fraction(2),), "c": (Fraction(3, 2),)}))
    assert {r.params for r in records} == {(("b", Fraction(2)), ("c", Fraction(3, 2)))}


def test_sweep_records_are_ordered():
    records = verify(["remark_b", "rockett"], 4)
    assert [r.case for r in records][:5] == ["rockett"] * 5
