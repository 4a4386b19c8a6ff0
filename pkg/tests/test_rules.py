from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonrule.classical import count_real_roots
from newtonrule.errors import DegreeError, NotRegularizedError
from newtonrule.parser import parse_polynomial
from newtonrule.poly import Polynomial, is_regular
from newtonrule.rules import (
    combine_with_descartes,
    necessary_condition_all_real,
    newton_complete,
    newton_modified,
    parity_set,
    tabulate,
)
from newtonrule.sectors import Sign, Status


def test_complete_rule_worked_degree8(degree8):
    r = newton_complete(degree8)
    assert (r.max_positive, r.max_negative, r.min_complex) == (4, 4, 0)
    assert r.max_real == 8


def test_modified_rule_worked_degree8(degree8):
    r = newton_modified(degree8)
    assert r.tally.as_dict() == {"pP": 3, "vV": 1, "pV": 1, "vP": 3}
    assert r.modified_flips == ((2, 4),)
    assert (r.max_positive, r.max_negative, r.min_complex) == (3, 3, 2)
    assert r.table.quadratic_signs[2:5] == (Sign.NEGATIVE,) * 3


def test_run_next_to_negative_is_kept():
    # (27/26)x^3 + (37/15)x^2 + (25/14)x - 33/5 has A_1, A_2 falsely positive;
    # between the two positive end caps the whole run flips
    p = parse_polynomial("(27/26)x^3 + (37/15)x^2 + (25/14)x - 33/5")
    t = tabulate(p)
    assert t.falsely_positive() == [1, 2]
    assert newton_modified(p).modified_flips == ((1, 2),)


def test_necessary_condition(degree8, quintic, gap_quartic):
    assert necessary_condition_all_real(quintic)
    nc = necessary_condition_all_real(degree8)
    assert not nc and nc.witness.element == 2
    assert "a_4" in str(nc.witness)
    gap = necessary_condition_all_real(gap_quartic)
    assert not gap.holds and gap.witness.element == 1


def test_necessary_condition_negative_and_vanishing():
    assert necessary_condition_all_real(parse_polynomial("x^3 + x + 1")).witness.reason == "negative"
    assert necessary_condition_all_real(parse_polynomial("2x^3 + 3x^2 + 3x + 1")).witness.reason == "vanishing"


def test_necessary_condition_shifts_when_a_coefficient_vanishes():
    p = parse_polynomial("x^3 - 7x")  # three real roots, zero constant and x^2 terms
    assert necessary_condition_all_real(p).holds


def test_degree_guards():
    with pytest.raises(DegreeError):
        newton_complete(parse_polynomial("x + 1"))
    with pytest.raises(DegreeError):
        necessary_condition_all_real(parse_polynomial("x^2 - 1"))


def test_zero_coefficient_needs_regularizing():
    with pytest.raises(NotRegularizedError):
        newton_complete(parse_polynomial("x^2 + 1"))


def test_quadratic_has_no_sector_checks():
    # no cubic sector exists, so a positive A_1 stays truly positive
    t = tabulate(parse_polynomial("x^2 + 3x + 1"))
    assert t.status[1] is Status.TRULY_POSITIVE
    assert newton_modified(parse_polynomial("x^2 + 3x + 1")).modified_flips == ()


def test_parity_sets():
    assert parity_set(4, 4) == frozenset({0, 2, 4})
    assert parity_set(3, 4) == frozenset({0, 2})
    assert parity_set(0, 3) == frozenset()
    r = combine_with_descartes(newton_complete(parse_polynomial("x^3 - 2x^2 - x + 3")), 2, 1)
    assert r.positive_set <= {0, 2} and r.negative_set == {1}


coeff = st.integers(-30, 30).filter(bool)


@settings(max_examples=200, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=8))
def test_complete_rule_bounds_hold(cs):
    p = Polynomial([F(c) for c in cs])
    if not is_regular(p):
        return
    r = newton_complete(p)
    assert count_real_roots(p, 0, None) <= r.max_positive
    assert count_real_roots(p, None, 0) <= r.max_negative
    assert p.degree - count_real_roots(p) >= r.min_complex


@settings(max_examples=200, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=8))
def test_modified_total_bound_holds(cs):
    p = Polynomial([F(c) for c in cs])
    if not is_regular(p):
        return
    m = newton_modified(p)
    assert count_real_roots(p) <= m.max_real
    assert m.max_real <= newton_complete(p).max_real
