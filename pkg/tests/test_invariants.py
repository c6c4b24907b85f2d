from fractions import Fraction

import pytest
from hypothesis import given, strategies as hst

from frobkit.errors import InsufficientData
from frobkit.invariants import (
    Estimate,
    InvariantSeries,
    Verdict,
    classify,
    classify_regular,
    classify_veronese,
    growth_order,
    limsup_estimate,
    regular_family_series,
    veronese_dual_series,
    veronese_estimate,
    veronese_splitting_series,
)

GRID = [(n, p) for n in range(2, 7) for p in (5, 7) if n % p]


# -- series and limsup ----------------------------------------------------------

def test_series_validation():
    with pytest.raises(ValueError, match="exceeds"):
        InvariantSeries.from_counts(2, [(1, 5)], 2)
    assert InvariantSeries.from_counts(2, [(1, 5)], 2, bounded=False).normalized() == [Fraction(5, 4)]
    with pytest.raises(ValueError, match="sorted"):
        InvariantSeries.from_counts(2, [(2, 1), (1, 1)], 2)
    with pytest.raises(ValueError):
        InvariantSeries.from_counts(2, [(1, -1)], 2)


def test_limsup_window():
    S = InvariantSeries.from_counts(2, [(1, 1), (2, 8), (3, 30), (4, 120)], 2)
    est = limsup_estimate(S, 3)
    assert est.value == Fraction(1, 2)
    assert est.cauchy_gap == Fraction(1, 2) - Fraction(30, 64)
    assert not est.certified
    with pytest.raises(InsufficientData):
        limsup_estimate(S, 5)


def test_estimate_rejects_inconsistent_interval():
    with pytest.raises(ValueError):
        Estimate(Fraction(1), 3, Fraction(0), Fraction(0), Fraction(1, 2))


# -- regular family -------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("p", [2, 3])
def test_regular_ring_is_constant_one(d, p):
    assert set(regular_family_series(d, d, p, range(0, 8)).normalized()) == {1}


@pytest.mark.parametrize("i", [0, 1, 2, 3])
def test_growth_order_of_regular_family(i):
    g = growth_order(regular_family_series(3, i, 2, range(0, 11)))
    assert g.order == i and g.integral
    assert g.ratio.value == 1 and g.ratio.cauchy_gap == 0


@given(hst.integers(1, 4), hst.data())
def test_lower_dimensional_pieces_vanish(d, data):
    i = data.draw(hst.integers(0, d - 1))
    values = regular_family_series(d, i, 3, range(0, 12)).normalized()
    assert values == sorted(values, reverse=True)
    assert values[-1] == Fraction(1, 3 ** (11 * (d - i)))


def test_growth_order_edge_cases():
    zero = InvariantSeries.from_counts(2, [(e, 0) for e in range(5)], 2)
    g = growth_order(zero)
    assert g.order is None and g.ratio.value == 0
    with pytest.raises(InsufficientData):
        growth_order(InvariantSeries.from_counts(2, [(0, 1), (1, 2)], 2))


def test_growth_order_of_splitting_series():
    g = growth_order(veronese_splitting_series(3, 2, range(1, 12)))
    assert g.order == 2
    assert abs(g.ratio.value - Fraction(1, 3)) < Fraction(1, 100)


# -- Veronese estimates ---------------------------------------------------------

@pytest.mark.parametrize("n, p", GRID)
def test_veronese_intervals_contain_limit(n, p):
    for l in range(n):
        est = veronese_estimate(n, l, p, range(1, 9))
        assert est.certified
        assert est.lower <= Fraction(l + 2, 2 * n) <= est.upper
        assert est.upper - est.lower < Fraction(1, 10**4)


@given(hst.sampled_from(GRID), hst.data())
def test_dual_series_bracket_and_bounded(grid, data):
    n, p = grid
    l = data.draw(hst.integers(0, n - 1))
    lo, hi = veronese_dual_series(n, l, p, range(0, 7))
    for a, b in zip(lo.normalized(), hi.normalized()):
        assert 0 <= a <= b <= 1


# -- classification -------------------------------------------------------------

def certified(x):
    return Estimate(Fraction(x), 3, Fraction(0), Fraction(x), Fraction(x))


@pytest.mark.parametrize(
    "s_r, s_omega, expected",
    [
        (1, 1, ("certified-yes",) * 4),
        (Fraction(1, 3), Fraction(1, 2), ("certified-no", "certified-yes", "certified-yes", "certified-no")),
        (Fraction(1, 2), Fraction(1, 2), ("certified-no", "certified-yes", "certified-yes", "certified-yes")),
        (0, Fraction(1, 4), ("certified-no", "certified-no", "certified-yes", "certified-no")),
        (0, 0, ("certified-no", "certified-no", "certified-no", "undetermined")),
    ],
)
def test_classify_examples(s_r, s_omega, expected):
    c = classify(certified(s_r), certified(s_omega))
    assert (c.regular, c.strongly_f_regular, c.f_rational, c.gorenstein) == expected


def test_uncertified_estimates_stay_undetermined():
    loose = Estimate(Fraction(1, 2), 3, Fraction(1, 100))
    c = classify(loose, loose)
    assert {c.regular, c.strongly_f_regular, c.f_rational, c.gorenstein} == {Verdict.UNDETERMINED}
    assert c.notes


@pytest.mark.parametrize("n, p", GRID)
def test_classify_veronese_grid(n, p):
    c, s_r, s_omega = classify_veronese(n, p, range(1, 9))
    assert c.regular is Verdict.NO
    assert c.strongly_f_regular is Verdict.YES
    assert c.f_rational is Verdict.YES
    assert c.gorenstein is (Verdict.YES if n == 2 else Verdict.NO)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_classify_regular(d):
    c, _, _ = classify_regular(d, 2, range(0, 5))
    assert c.regular is Verdict.YES and c.gorenstein is Verdict.YES
