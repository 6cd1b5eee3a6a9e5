"""Sparse polynomials: parsing, printing, grading, orders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebcurve.numberfield import real_cyclotomic_field
from chebcurve.polyring import (
    GREVLEX,
    LEX,
    InexactDivisionError,
    MPoly,
    ParseError,
    dehomogenize,
    exact_div,
    homogenize,
    monomial_basis,
    parse,
    partials,
    to_string,
)


class TestParse:
    def test_binomial_square(self):
        p = parse("x^2 - 2*x*y + y^2")
        q = parse("x - y") * parse("x - y")
        assert p == q

    def test_chebyshev_quartic(self):
        p = parse("8*x^4+8*y^4-8*x^2*z^2-8*y^2*z^2+2*z^4")
        assert p.is_homogeneous() and p.degree() == 4
        assert p.coefficient((0, 0, 4)) == 2

    def test_rational_coefficient(self):
        p = parse("1/2*x + y")
        assert p.coefficient((1, 0, 0)) == Fraction(1, 2)

    def test_roundtrip_of_text(self):
        text = "8*x^4+8*y^4-8*x^2*z^2-8*y^2*z^2+2*z^4"
        assert parse(to_string(parse(text))) == parse(text)

    def test_error_position_is_one_based(self):
        with pytest.raises(ParseError) as err:
            parse("x +")
        assert err.value.position == 4

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="unknown variable"):
            parse("x + z", nvars=2)

    def test_exponent_overflow(self):
        with pytest.raises(ParseError, match="overflow"):
            parse("x^65536")

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="denominator"):
            parse("1/0*x")

    def test_missing_star_rejected(self):
        with pytest.raises(ParseError):
            parse("2x")

    def test_whitespace_ignored(self):
        assert parse(" x ^ 2 +  1/2 * y ") == parse("x^2+1/2*y")


class TestHomogenize:
    def test_constant_lift(self):
        p = parse("x^2 + 1", nvars=2)
        assert homogenize(p, 2) == parse("x^2 + z^2")

    def test_chebyshev_cubic(self):
        p = parse("4*x^3 - 3*x + 4*y^3 - 3*y", nvars=2)
        assert homogenize(p, 3) == parse("4*x^3 + 4*y^3 - 3*x*z^2 - 3*y*z^2")

    def test_already_homogeneous(self):
        p = parse("x^2 + x*y", nvars=2)
        h = homogenize(p, 2)
        assert dehomogenize(h) == p
        assert all(m[2] == 0 for m in h.terms)

    def test_degree_check(self):
        with pytest.raises(ValueError):
            homogenize(parse("x^3", nvars=2), 2)


class TestPartials:
    def test_cube(self):
        f = parse("x^3")
        fx, fy, fz = partials(f)
        assert fx == parse("3*x^2") and fy.is_zero() and fz.is_zero()

    def test_product(self):
        fx, fy, fz = partials(parse("x*y*z"))
        assert (fx, fy, fz) == (parse("y*z"), parse("x*z"), parse("x*y"))

    def test_chebyshev_quartic(self):
        f = parse("8*x^4+8*y^4-8*x^2*z^2-8*y^2*z^2+2*z^4")
        fx, fy, fz = partials(f)
        assert fx == parse("32*x^3 - 16*x*z^2")
        assert fy == parse("32*y^3 - 16*y*z^2")
        assert fz == parse("-16*x^2*z - 16*y^2*z + 8*z^3")


class TestEvaluate:
    def test_rational_point(self):
        assert parse("x + y").evaluate((Fraction(1, 2), Fraction(1, 2), 0)) == 1

    def test_chebyshev_critical_value(self):
        field = real_cyclotomic_field(3)
        lam = field.from_rational(Fraction(1, 2))
        p = parse("4*x^3 - 3*x", nvars=2)
        assert p.evaluate((lam, field.zero())) == -1

    def test_node_on_curve(self):
        field = real_cyclotomic_field(4)
        a = field.gen() * Fraction(1, 2)  # cos(pi/4)
        p = parse("8*x^4 + 8*y^4 - 8*x^2 - 8*y^2 + 2", nvars=2)
        assert p.evaluate((a, field.zero())) == 0

    def test_mixed_fields_rejected(self):
        a = real_cyclotomic_field(4).gen()
        b = real_cyclotomic_field(5).gen()
        p = MPoly(2, {(1, 0): a})
        with pytest.raises(ValueError, match="different fields"):
            p.evaluate((b, b))


class TestMonomialBasis:
    def test_linear(self):
        assert monomial_basis(1, 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_counts(self):
        assert len(monomial_basis(2, 3)) == 6
        assert len(monomial_basis(2, 2)) == 6

    @pytest.mark.parametrize("r", range(0, 7))
    def test_binomial_count(self, r):
        expected = (r + 2) * (r + 1) // 2
        assert len(monomial_basis(r, 3)) == expected
        assert len(monomial_basis(r, 2)) == expected


_small_coeff = st.fractions(min_value=-9, max_value=9, max_denominator=4)


@st.composite
def sparse_polys(draw, nvars=3, max_degree=6):
    n = draw(st.integers(min_value=0, max_value=6))
    terms = {}
    for _ in range(n):
        mono = tuple(
            draw(st.integers(min_value=0, max_value=max_degree)) for _ in range(nvars)
        )
        terms[mono] = draw(_small_coeff)
    return MPoly(nvars, terms)


@st.composite
def homogeneous_polys(draw, degree=None):
    d = degree if degree is not None else draw(st.integers(min_value=1, max_value=8))
    monos = monomial_basis(d, 3)
    terms = {}
    for m in draw(st.lists(st.sampled_from(monos), min_size=1, max_size=6)):
        terms[m] = draw(_small_coeff)
    return MPoly(3, terms), d


class TestProperties:
    @settings(max_examples=80)
    @given(sparse_polys())
    def test_print_parse_roundtrip(self, p):
        assert parse(to_string(p)) == p

    @settings(max_examples=80)
    @given(homogeneous_polys())
    def test_euler_relation(self, pd):
        f, d = pd
        if f.is_zero():
            return
        fx, fy, fz = partials(f)
        x, y, z = (MPoly.variable(i, 3) for i in range(3))
        assert x * fx + y * fy + z * fz == d * f

    @settings(max_examples=60)
    @given(
        st.sampled_from([GREVLEX, LEX]),
        st.tuples(*[st.integers(min_value=0, max_value=8)] * 3),
        st.tuples(*[st.integers(min_value=0, max_value=8)] * 3),
        st.tuples(*[st.integers(min_value=0, max_value=8)] * 3),
    )
    def test_orders_are_multiplicative_and_total(self, order, a, b, w):
        ka, kb = order.key(a), order.key(b)
        assert (ka == kb) == (a == b)
        if ka < kb:
            aw = tuple(i + j for i, j in zip(a, w))
            bw = tuple(i + j for i, j in zip(b, w))
            assert order.key(aw) < order.key(bw)

    @settings(max_examples=40)
    @given(sparse_polys(max_degree=3), sparse_polys(max_degree=3))
    def test_exact_division_inverts_multiplication(self, p, q):
        if p.is_zero() or q.is_zero():
            return
        assert exact_div(p * q, q) == p


class TestExactDivision:
    def test_inexact_raises(self):
        with pytest.raises(InexactDivisionError):
            exact_div(parse("x^2 + y"), parse("x + 1"))

    def test_grevlex_order_of_string(self):
        # printing is deterministic and sorted by the active order
        p = parse("y^2 + x^2 + x*y")
        assert to_string(p) == "x^2 + x*y + y^2"
