"""Exact scalar arithmetic: canonical forms, the grammar, and field axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homly.errors import DomainError, ParseError, PoleError
from homly.field import (
    Polynomial,
    RationalFunction,
    ScalarDomain,
    format_scalar,
    parse_scalar,
    polynomial_gcd,
    scalar_add,
    scalar_div,
    scalar_eval,
    scalar_mul,
)

Q = ScalarDomain.Q
QL = ScalarDomain.QL


def rf(text):
    return parse_scalar(text, QL)


class TestRationalArithmetic:
    def test_add(self):
        assert scalar_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            scalar_div(Fraction(5), Fraction(0))

    def test_canonical_zero(self):
        assert parse_scalar("-0", Q) == 0
        assert format_scalar(parse_scalar("-0", Q)) == "0"


class TestRationalFunctionArithmetic:
    def test_additive_inverse(self):
        assert rf("1/l") + rf("-1/l") == 0
        assert not (rf("1/l") + rf("-1/l"))

    def test_common_denominator_sum(self):
        # 2l^2 + 2/l^2 over the common denominator l^2, reduced by hand
        total = rf("2*l^2") + rf("2/l^2")
        assert total == rf("(2*l^4+2)/l^2")
        assert total.num == Polynomial([2, 0, 0, 0, 2])
        assert total.den == Polynomial([0, 0, 1])

    def test_cancellation(self):
        assert rf("1/l") * rf("l^2") == rf("l")

    def test_product_reduces_to_constant(self):
        # 2l^2 * (-2/l^2): multiply then cancel the l^2 by the gcd
        prod = rf("2*l^2") * rf("-2/l^2")
        assert prod == RationalFunction(Polynomial([-4]))
        assert format_scalar(prod) == "-4"

    def test_absorbing_zero(self):
        assert rf("0") * rf("(1-l^4)/l^2") == 0

    def test_quotients(self):
        assert scalar_div(rf("1"), rf("l")) == rf("1/l")
        assert scalar_div(rf("1-l^4"), rf("l^2")) == rf("(1-l^4)/l^2")

    def test_monic_denominator_normalization(self):
        # 1/(2l) must normalize to (1/2)/l
        s = rf("1/(2*l)")
        assert s.den == Polynomial([0, 1])
        assert s.num == Polynomial([Fraction(1, 2)])

    def test_gcd_normalization_across_routes(self):
        a = rf("(l^2-1)/(l-1)")
        assert a == rf("l+1")
        assert a.den == Polynomial([1])

    def test_polynomial_gcd(self):
        g = polynomial_gcd(Polynomial([-1, 0, 1]), Polynomial([1, 1]))
        assert g == Polynomial([1, 1])


class TestEvaluation:
    def test_residual_vanishes_at_one(self):
        assert scalar_eval(rf("2*(1-l^4)/l^2"), 1) == 0

    def test_residual_at_two(self):
        # 2 * (1 - 16) / 4 by hand
        assert scalar_eval(rf("2*(1-l^4)/l^2"), 2) == Fraction(-15, 2)

    def test_pole(self):
        with pytest.raises(PoleError):
            scalar_eval(rf("1/l"), 0)

    def test_rational_passthrough(self):
        assert scalar_eval(Fraction(3, 2), 7) == Fraction(3, 2)


class TestParser:
    def test_polynomial(self):
        assert rf("2*l^2") == RationalFunction(Polynomial([0, 0, 2]))

    def test_rational_function(self):
        s = rf("(1-l^4)/l^2")
        assert s.num == Polynomial([1, 0, 0, 0, -1])
        assert s.den == Polynomial([0, 0, 1])

    def test_lambda_rejected_in_rational_domain(self):
        with pytest.raises(DomainError):
            parse_scalar("2*l^2", Q)

    def test_parse_error_offset(self):
        with pytest.raises(ParseError) as err:
            parse_scalar("2+*3", Q)
        assert err.value.position == 2

    def test_unexpected_character_offset(self):
        with pytest.raises(ParseError) as err:
            parse_scalar("1 + x", Q)
        assert err.value.position == 4

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError):
            parse_scalar("(1+2", Q)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_scalar("1 2", Q)

    def test_unary_minus_binds_looser_than_power(self):
        assert parse_scalar("-2^2", Q) == -4
        assert parse_scalar("(-2)^2", Q) == 4
        assert rf("-l^2") == -rf("l^2")

    def test_whitespace_insignificant(self):
        assert rf(" ( 1 - l ^ 4 ) / l ^ 2 ") == rf("(1-l^4)/l^2")

    def test_division_by_zero_in_text(self):
        with pytest.raises(ParseError):
            parse_scalar("1/0", Q)


class TestPrinter:
    @pytest.mark.parametrize(
        "text",
        [
            "0",
            "3",
            "-15/2",
            "l",
            "-l",
            "2*l^2",
            "1/2*l^3",
            "2-2*l^4",
            "(2-2*l^4)/l^2",
            "(1-l^4)/l^2",
            "-2/l^2",
            "1/l",
            "(1+l)/(1+l^3)",
        ],
    )
    def test_fixed_point(self, text):
        s = rf(text)
        assert format_scalar(s) == text or parse_scalar(format_scalar(s), QL) == s

    def test_known_forms(self):
        assert format_scalar(rf("2*(1-l^4)/l^2")) == "(2-2*l^4)/l^2"
        assert format_scalar(Fraction(-15, 2)) == "-15/2"


# --- randomized properties ---------------------------------------------------

fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
polynomials = st.lists(fractions, min_size=0, max_size=4).map(Polynomial)
nonzero_polynomials = polynomials.filter(bool)
rationals = st.builds(
    RationalFunction, polynomials, nonzero_polynomials
)
nonzero_rationals = rationals.filter(bool)


@given(rationals, rationals, rationals)
def test_field_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_additive_inverse_exact(a):
    assert a + (-a) == RationalFunction(Polynomial([]))


@given(nonzero_rationals)
def test_multiplicative_inverse_exact(a):
    assert a * (RationalFunction(Polynomial([1])) / a) == 1


@given(rationals, rationals)
def test_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(rationals, rationals)
def test_canonical_equality_is_structural(a, b):
    if a == b:
        assert (a.num.coeffs, a.den.coeffs) == (b.num.coeffs, b.den.coeffs)


@given(rationals, nonzero_polynomials)
def test_unreduced_representations_normalize(a, k):
    assert RationalFunction(a.num * k, a.den * k) == a


@given(rationals, rationals, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_evaluation_is_a_homomorphism(a, b, p):
    try:
        av, bv = a(p), b(p)
    except PoleError:
        return
    assert (a + b)(p) == av + bv
    assert (a * b)(p) == av * bv


@given(rationals)
@settings(max_examples=200)
def test_parse_print_parse_is_fixed_point(a):
    text = format_scalar(a)
    again = parse_scalar(text, QL)
    assert again == a
    assert format_scalar(again) == text
