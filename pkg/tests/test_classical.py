import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonrule.classical import (
    bareiss_determinant,
    count_real_roots,
    descartes_negative,
    descartes_positive,
    discriminant,
    discriminant_interpretation,
    exact_root_in,
    format_enclosure,
    fourier_bound,
    fourier_signs,
    isolate_real_roots,
    privileged_free_terms,
    resultant,
    resultant_discriminant,
    sign_variations,
    simplest_between,
    sturm_chain,
    sturm_count,
)
from newtonrule.errors import ZeroPolynomialError
from newtonrule.parser import parse_polynomial as P
from newtonrule.poly import Polynomial, from_roots


def signs(seq):
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in seq)


def test_sign_variations_skip_zeros():
    assert sign_variations([1, 0, -2, 0, 0, 3, 4]) == 2
    assert sign_variations([]) == 0


def test_descartes(degree8):
    assert descartes_positive(degree8) == 4
    assert descartes_negative(degree8) == 4
    assert descartes_positive(P("x^3 - x - 1")) == 1


def test_fourier_signs_worked_degree8(degree8):
    assert signs(fourier_signs(degree8, -3)) == "+-+-+-+-+"
    assert signs(fourier_signs(degree8, 0)) == "++++-++-+"
    assert fourier_bound(degree8, -3, 0) == 4


def test_sturm_signs_worked_degree8(degree8):
    ch = sturm_chain(degree8)
    assert signs(ch.signs_at(-3)) == "+-+-+---+"
    assert signs(ch.signs_at(0)) == "++-++--++"
    assert signs(ch.signs_at(15)) == "++++++-++"
    assert sturm_count(degree8, -3, 0) == 2
    assert sturm_count(degree8, 0, 15) == 2
    assert count_real_roots(degree8) == 4


def test_sturm_half_open():
    p = from_roots([0, 1])
    assert sturm_count(p, 0, 1) == 1
    assert sturm_count(p, -1, 0) == 1
    with pytest.raises(ValueError):
        sturm_count(p, 1, 1)


def test_multiplicity_counts():
    p = from_roots([2, 2, 2, -1])
    assert count_real_roots(p) == 4
    assert count_real_roots(p, multiplicity=False) == 2


def test_resultant_and_discriminant_values(degree8):
    assert resultant(P("x - 2"), P("x - 3")) == -1
    assert discriminant(P("x^3 - x^2 + x + 1")) == -44
    assert discriminant(P("x^2 - 5x + 6")) == 1
    assert discriminant(degree8) == F(375345740011744263371194957824, 78125)


def test_bareiss_matches_cofactor():
    m = [[2, -1, 0], [F(1, 2), 3, 4], [0, 5, -6]]
    assert bareiss_determinant(m) == 2 * (3 * -6 - 20) + 1 * (F(1, 2) * -6)
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        descartes_positive(Polynomial((0,)))


@pytest.mark.parametrize("delta, n, counts", [
    (1, 4, (0, 4)),
    (-1, 5, (2,)),
    (0, 3, (0, 2)),
])
def test_discriminant_interpretation(delta, n, counts):
    v = discriminant_interpretation(delta, n)
    assert v.complex_root_counts == counts
    assert v.repeated_root == (delta == 0)


def test_isolation_brackets_each_root():
    p = P("x^3 - 2x")
    ivs = isolate_real_roots(p, F(1, 100))
    assert len(ivs) == 3 and all(iv.width < F(1, 100) for iv in ivs)
    assert F(0) in ivs[1]
    assert exact_root_in(p, ivs[1].lo, ivs[1].hi) == 0
    assert exact_root_in(p, ivs[2].lo, ivs[2].hi) is None


def test_simplest_between():
    assert simplest_between(F(1, 3), F(1, 2)) == F(1, 2)
    assert simplest_between(F(-7, 5), F(-4, 3)) == F(-4, 3)
    assert simplest_between(F(3, 10), F(4, 10)) == F(1, 3)
    assert simplest_between(F(-1), F(2)) == 0


@settings(max_examples=200)
@given(st.fractions(min_value=-40, max_value=40, max_denominator=60),
       st.fractions(min_value=0, max_value=3, max_denominator=60))
def test_simplest_between_is_minimal(lo, w):
    hi = lo + w
    s = simplest_between(lo, hi)
    assert lo <= s <= hi
    for d in range(1, s.denominator):
        # no smaller denominator fits
        assert math.ceil(lo * d) > math.floor(hi * d)


@pytest.mark.parametrize("text, want", [
    ("x^5 - 3x^4 - x^3 + 7x^2 - (3/2)x", ["≈0.082", "≈-0.944", "≈-2.837", "≈-5.530"]),
    ("5x^5 + (1/10)x^4 - 8x^3 - (1/4)x^2 + 4x", ["≈1.215", "≈0.834", "≈-0.572", "≈-1.117"]),
    ("x^3 - 5x^2 - x", ["≈21.901", "≈-0.049"]),
    ("x^3 - x^2 + x", []),
])
def test_privileged_free_terms(text, want):
    assert [t.decimal(3) for t in privileged_free_terms(P(text))] == want


def test_privileged_terms_exact_for_rational_stationary_points():
    # stationary points 0 and 2; p(0) = 0, p(2) = -4
    terms = privileged_free_terms(P("x^3 - 3x^2"))
    assert [t.decimal(3) for t in terms] == ["=4.000", "=0.000"]
    assert all(t.exact for t in terms)


def test_format_enclosure():
    assert format_enclosure(F(1, 3), F(1, 3)) == "≈0.333"
    assert format_enclosure(F(1, 2), F(1, 2)) == "=0.500"
    assert format_enclosure(F(3329, 10000), F(3331, 10000)) == "≈0.333"
    assert format_enclosure(F(3344, 10000), F(3346, 10000)) == "≈[0.334, 0.335]"


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_counts_agree_with_known_roots(roots):
    p = from_roots(roots) * P("x^2 + 1")
    assert count_real_roots(p) == len(roots)
    assert count_real_roots(p, 0, None) == sum(1 for r in roots if r > 0)
    sign = -1 if (p.degree * (p.degree - 1) // 2) % 2 else 1
    assert discriminant(p) == sign * resultant_discriminant(p)
    assert descartes_positive(p) >= sum(1 for r in roots if r > 0)
