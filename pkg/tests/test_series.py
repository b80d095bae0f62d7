from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyfault import series
from polyfault.enumeration import count_domino_dp, count_faultfree_dp
from polyfault.series import IntPoly, RationalGF, coeff

Z = RationalGF.poly(0, 1)

polys = st.lists(st.integers(-20, 20), max_size=5).map(IntPoly)
dens = st.lists(st.integers(-20, 20), max_size=4).map(lambda xs: IntPoly([1] + xs))


@given(polys, dens, polys, dens)
def test_addition_matches_series(n1, d1, n2, d2):
    a, b = RationalGF(n1, d1), RationalGF(n2, d2)
    s = (a + b).series(8)
    assert s == [x + y for x, y in zip(a.series(8), b.series(8))]


@given(polys, dens, polys, dens)
def test_product_matches_cauchy_product(n1, d1, n2, d2):
    a, b = RationalGF(n1, d1), RationalGF(n2, d2)
    sa, sb = a.series(8), b.series(8)
    conv = [sum(sa[i] * sb[k - i] for i in range(k + 1)) for k in range(8)]
    assert (a * b).series(8) == conv


@given(polys, dens, st.integers(-3, 3).filter(bool))
def test_scale_substitution(n, d, a):
    g = RationalGF(n, d)
    assert g.scale(a).series(7) == [c * a**k for k, c in enumerate(g.series(7))]


@given(polys, dens)
def test_even_part_and_spread(n, d):
    g = RationalGF(n, d)
    s = g.series(8)
    assert g.even_part().series(8) == [c if k % 2 == 0 else 0 for k, c in enumerate(s)]
    spread = g.spread(2).series(8)
    assert spread[::2] == s[:4] and not any(spread[1::2])


def test_quarter_substitution_keeps_integers():
    g = RationalGF.poly(0, 0, 16)
    q = g.scale(Fraction(1, 4)).spread(2)
    assert q.series(5) == [0, 0, 0, 0, 1]


def test_constructor_and_coeff_errors():
    with pytest.raises(ValueError):
        RationalGF(IntPoly([1]), IntPoly([0, 1]))
    with pytest.raises(ArithmeticError):
        coeff(RationalGF(IntPoly([1]), IntPoly([2, 1])), 1)
    with pytest.raises(ValueError):
        coeff(Z, -1)


def test_5x3t_and_recurrence():
    g = series.gf_5x3t()
    vals = [coeff(g, t) for t in range(2, 11)]
    assert vals == [72, 384, 3360, 21504, 163968, 1136640, 8283648, 58791936, 423121920]
    for t in range(6, 11):
        n = lambda k: coeff(g, k)  # noqa: E731
        assert n(t) == 2 * n(t - 1) + 31 * n(t - 2) + 40 * n(t - 3) + 20 * n(t - 4)
    assert g == Z * series.g1() * 8 + Z * series.g2() * 4


@pytest.mark.parametrize("t", [3, 4, 5])
def test_5x3t_matches_dp_from_t3(t):
    assert coeff(series.gf_5x3t(), t) == count_faultfree_dp((5, 3 * t))


def test_closed_form_4x3t():
    assert [series.closed_form_4x3t(t) for t in range(2, 7)] == [2, 8, 48, 288, 1728]
    with pytest.raises(ValueError):
        series.closed_form_4x3t(1)


def test_6x6t():
    f = series.f_6x6t()
    assert series.both_sides(series.q_6x6t(), 2) == f
    assert all(coeff(f, t) == series.lower_bound_6x6t(t) for t in range(2, 13))
    assert series.lower_bound_6x6t(3) == 73728
    assert series.lower_bound_6x6t(2) <= count_faultfree_dp((6, 12))
    with pytest.raises(ValueError):
        series.lower_bound_6x6t(1)


def test_both_sides_edge_cases():
    zero = RationalGF.poly(0)
    assert series.both_sides(zero, 3).is_zero()
    assert coeff(series.both_sides(series.q_6x6t(), 2), 2) == 384
    with pytest.raises(ValueError):
        series.both_sides(RationalGF.poly(1, 1), 2)
    with pytest.raises(ValueError):
        series.both_sides(series.q_6x6t(), 0)


def test_7x6t_system():
    s = series.system_7x6t()
    assert all(r.is_zero() for r in s.residuals().values())
    assert coeff(s.H, 1) == 16 and coeff(s.S, 2) == 1024


def test_moore_gfs():
    m = series.moore_gfs()
    assert coeff(m["G3p"], 1) == 2 and coeff(m["G1p"], 1) == 4
    assert m["G3p"] == series.g2()


def test_7x6t_family():
    fam = series.gf_7x6t()
    assert coeff(fam.Q1, 3) == 0
    assert coeff(fam.A, 4) == 1280 and coeff(fam.B, 4) == 2176
    assert coeff(fam.Q2, 4) == 2 * 1280 + 2 * 2176
    assert fam.F == fam.F1 + fam.F2
    assert coeff(fam.F, 4) <= count_faultfree_dp((7, 12))


def test_a_and_b_against_sum_forms():
    # G(2z) - G(-2z) keeps twice the odd coefficients scaled by 2^k
    m = series.moore_gfs()
    fam = series.gf_7x6t()
    g3, g1 = m["G3p"].series(8), m["G1p"].series(8)
    for k in range(3, 9):
        j = k - 3
        odd3 = 2 * g3[j] * 2**j if j % 2 else 0
        odd1 = 2 * g1[j] * 2**j if j % 2 else 0
        assert coeff(fam.A, k) == 160 * odd3
        assert coeff(fam.B, k) == 136 * odd1


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 5) for b in range(1, 5)])
def test_kasteleyn(a, b):
    assert series.kasteleyn(a, b) == count_domino_dp((2 * a, 2 * b))


def test_kasteleyn_small_values():
    assert series.kasteleyn(1, 1) == 2
    assert series.kasteleyn(1, 2) == 5
    with pytest.raises(ValueError):
        series.kasteleyn(0, 1)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (4, 6)])
def test_upper_bound(m, n):
    rep = series.tromino_upper_bound(m, n)
    assert rep.holds
    assert rep.upper_bound == 2 ** (4 * m * n // 3) * min(rep.domino_counts)
    with pytest.raises(ValueError):
        series.tromino_upper_bound(2, 2)


def test_family_value():
    assert series.family_value("5x3t", 6) == (163968, "exact")
    assert series.family_value("6x6t-lower", 2) == (384, "lower_bound")
    with pytest.raises(ValueError):
        series.family_value("nope", 2)
