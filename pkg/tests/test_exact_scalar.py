from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grasstorus.exact_scalar import (
    I, ONE, ZERO, GaussianRational, LaurentScalar, ProjectivePoint, T, format_gaussian,
    format_laurent, format_point, gq, laurent_limit_ratio, limit_of_pair, parse_gaussian,
    parse_laurent, parse_point,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small, small)
nonzero = gaussians.filter(bool)
laurents = st.dictionaries(st.integers(-3, 3), gaussians, max_size=4).map(LaurentScalar)


def test_examples():
    assert (1 + I) * (1 - I) == 2
    assert I.inverse() == -I
    assert gq(3).norm_sq() == 9


def test_parts_are_reduced():
    x = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert x.re == Fraction(1, 2) and x.im == Fraction(-3, 4)
    assert x.re.denominator > 0


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_real_hash_matches_fraction():
    assert hash(gq(Fraction(3, 7))) == hash(Fraction(3, 7))
    assert gq(Fraction(3, 7)) == Fraction(3, 7)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a.conjugate().conjugate() == a
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()
    assert a.norm_sq() == (a * a.conjugate()).re and (a * a.conjugate()).im == 0


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a ** -2 * a ** 2 == ONE


@given(gaussians)
def test_text_round_trip(a):
    assert parse_gaussian(format_gaussian(a)) == a


# projective points


@pytest.mark.parametrize("a,b,first,second", [(2, 4, Fraction(1, 2), 1), (3, 0, 1, 0), (0, 5, 0, 1)])
def test_canonical_points(a, b, first, second):
    p = ProjectivePoint(a, b)
    assert (p.first, p.second) == (gq(first), gq(second))


def test_zero_zero_rejected():
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0)


@given(nonzero, gaussians, nonzero)
def test_projective_scaling(a, b, s):
    assert ProjectivePoint(a, b) == ProjectivePoint(a * s, b * s)


def test_point_text():
    assert format_point(ProjectivePoint.infinity()) == "inf"
    assert format_point(None) == "undef"
    for text in ("inf", "undef", "1/2", "-3+2*i"):
        assert format_point(parse_point(text)) == text


# Laurent polynomials


def test_limit_examples():
    one = LaurentScalar.constant(1)
    assert laurent_limit_ratio(T, one) == ProjectivePoint(0, 1)
    assert laurent_limit_ratio(2 + T, one + T) == ProjectivePoint(2, 1)
    assert laurent_limit_ratio(2 * (one + T), 2 + T) == ProjectivePoint(1, 1)
    assert laurent_limit_ratio(one, T) == ProjectivePoint.infinity()


def test_limit_of_pair():
    zero = LaurentScalar()
    assert limit_of_pair(zero, zero) is None
    assert limit_of_pair(T, zero) == ProjectivePoint.infinity()
    with pytest.raises(ZeroDivisionError):
        laurent_limit_ratio(T, zero)


def test_cancellation_before_valuation():
    f = (1 + T) * (1 - T) - 1
    assert f == LaurentScalar({2: -1})
    assert f.valuation() == 2


def test_no_stored_zeros():
    f = LaurentScalar({0: 1, 3: 0, -1: gq(0)})
    assert f.terms == {0: ONE}


@given(laurents.filter(bool), laurents.filter(bool), laurents.filter(bool))
def test_limit_ratio_cancels_common_factor(f, g, h):
    assert laurent_limit_ratio(f * h, g * h) == laurent_limit_ratio(f, g)


@given(laurents, laurents)
def test_laurent_ring(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    if f and g:
        assert (f * g).valuation() == f.valuation() + g.valuation()


@given(laurents, nonzero)
def test_rescaling_preserves_limits(f, c):
    g = LaurentScalar.constant(1) + T
    if f:
        assert laurent_limit_ratio(f.scale_variable(c), g.scale_variable(c)).is_zero() == \
            laurent_limit_ratio(f, g).is_zero()


@given(laurents)
def test_laurent_text_round_trip(f):
    assert parse_laurent(format_laurent(f)) == f


@pytest.mark.parametrize("text,expected", [
    ("2+1*t^1", {0: 2, 1: 1}),
    ("2+t", {0: 2, 1: 1}),
    ("-t^-2+3/4*i", {-2: -1, 0: gq(0, Fraction(3, 4))}),
    ("(1+i)*t^2", {2: gq(1, 1)}),
    ("t*t", {2: 1}),
])
def test_parse_laurent(text, expected):
    assert parse_laurent(text) == LaurentScalar(expected)


@pytest.mark.parametrize("bad", ["", "2+", "x", "t^", "(1+t", "1//2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_laurent(bad)


def test_parse_gaussian_rejects_t():
    with pytest.raises(ValueError):
        parse_gaussian("1+t")
