from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonrule.classical import discriminant
from newtonrule.cubic import (
    CubicRootClass,
    CubicSector,
    PrescribedInterval,
    classify_cubic,
    classify_elements,
    cubic_sectors,
    interval_contains,
    prescribed_interval,
    sqrt_bounds,
)
from newtonrule.errors import DegreeError, NotRegularizedError
from newtonrule.poly import BinomialForm, from_roots, to_binomial
from newtonrule.sectors import Status

small = st.fractions(min_value=-12, max_value=12, max_denominator=7)


def sector_of(p):
    bf = to_binomial(p)
    return cubic_sectors(bf)[0]


def test_sectors_of_worked_degree8(degree8):
    secs = cubic_sectors(to_binomial(degree8))
    assert len(secs) == 6
    first = secs[0]
    assert (first.c3, first.c2, first.c1, first.c0) == (F(1, 10), 1, 2, 1)
    assert first.polynomial().coeffs == (1, 6, 3, F(1, 10))
    assert first.label() == "(a3, a2, a1, a0)"


@pytest.mark.parametrize("roots, cls", [
    ([1, 2, 3], CubicRootClass.THREE_REAL_DISTINCT),
    ([1, 1, 3], CubicRootClass.THREE_REAL_WITH_DOUBLE),
    ([2, 2, 2], CubicRootClass.TRIPLE_ROOT),
])
def test_classify_known_roots(roots, cls):
    assert classify_cubic(sector_of(from_roots(roots))) is cls


def test_classify_one_real():
    s = sector_of(from_roots([0]) * (from_roots([]) + 0) + from_roots([1, 1, 1]) + 5)
    assert classify_cubic(s) is CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR
    assert not CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR.three_real


def test_interval_endpoints_quintic(quintic):
    secs = cubic_sectors(to_binomial(quintic))
    iv = prescribed_interval(secs[0], "high")
    lo, hi = iv.approx()
    assert lo == pytest.approx(-4.2667, abs=1e-3) and hi == pytest.approx(0.3413, abs=1e-3)
    assert iv.contains(F(-14, 5))
    low = prescribed_interval(secs[0], "low")
    assert low.contains(F(-144))
    lo3, hi3 = (float(v) for v in low.decimal_endpoints(3))
    assert lo3 == pytest.approx(-204.8, abs=2e-3) and hi3 == pytest.approx(56.425, abs=2e-3)


def test_interval_outward_rounding_covers():
    iv = PrescribedInterval(u=F(1), A=F(2), d=F(3))
    lo, hi = iv.decimal_endpoints(4)
    (ll, lh), (hl, hh) = iv.endpoint_bounds(F(1, 10 ** 9))
    assert F(lo) <= ll and F(hi) >= hh


def test_empty_and_point_intervals():
    assert PrescribedInterval(F(0), F(-1), F(1)).is_empty
    pt = PrescribedInterval(F(2), F(0), F(1))
    assert pt.is_point and interval_contains(pt, 2) and not interval_contains(pt, 3)


def test_zero_denominator_needs_regularizing():
    with pytest.raises(NotRegularizedError):
        prescribed_interval(CubicSector(F(1), F(1), F(1), F(0)), "high")


def test_sqrt_bounds():
    lo, hi = sqrt_bounds(F(2), 1000)
    assert lo * lo <= 2 <= hi * hi and hi - lo <= F(1, 1000)
    assert sqrt_bounds(F(9, 4), 10) == (F(3, 2), F(3, 2))


def test_classify_elements_worked_degree8(degree8):
    t = classify_elements(to_binomial(degree8))
    assert t.falsely_positive() == [2, 3, 4]
    assert t.status[1] is Status.TRULY_POSITIVE
    outside = sorted((c.element, c.adjacent) for c in t.checks if not c.inside)
    assert outside == [(2, 4), (3, 1), (3, 5), (4, 2)]


def test_classify_elements_guards():
    with pytest.raises(DegreeError):
        classify_elements(BinomialForm((1, 2, 1)))
    with pytest.raises(NotRegularizedError):
        classify_elements(BinomialForm((0, 1, 2, 1)))


@settings(max_examples=300)
@given(small, small, small, small.filter(lambda v: v != 0))
def test_classification_matches_discriminant(c0, c1, c2, c3):
    s = CubicSector(c3, c2, c1, c0)
    d = discriminant(s.polynomial())
    cls = classify_cubic(s)
    if d > 0:
        assert cls is CubicRootClass.THREE_REAL_DISTINCT
    elif d < 0:
        assert cls is CubicRootClass.ONE_REAL_ONE_COMPLEX_PAIR
    else:
        assert cls in (CubicRootClass.THREE_REAL_WITH_DOUBLE, CubicRootClass.TRIPLE_ROOT)


@settings(max_examples=200)
@given(small.filter(bool), small.filter(bool), small.filter(bool), small.filter(bool))
def test_reciprocal_sector_shares_membership(c0, c1, c2, c3):
    # reversing a cubic keeps its real-root count, so both memberships agree
    s = CubicSector(c3, c2, c1, c0)
    r = s.reciprocal()
    assert r.B1 == s.B2 and r.B2 == s.B1
    inside_low = interval_contains(prescribed_interval(s, "low"), s.c0)
    inside_high = interval_contains(prescribed_interval(s, "high"), s.c3)
    assert inside_low == inside_high
    assert inside_low == interval_contains(prescribed_interval(r, "high"), r.c3)
