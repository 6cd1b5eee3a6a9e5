"""Rational and cyclotomic field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebcurve import upoly
from chebcurve.numberfield import (
    alg_inv,
    cos_multiple,
    critical_point,
    cyclotomic,
    real_cyclotomic_field,
    real_subfield_minpoly,
)


def _totient(n):
    count = 0
    from math import gcd

    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


class TestCyclotomic:
    def test_first(self):
        assert cyclotomic(1) == upoly.upoly([-1, 1])

    def test_eighth(self):
        # divide t^8 - 1 by Phi_1 * Phi_2 * Phi_4
        assert cyclotomic(8) == upoly.upoly([1, 0, 0, 0, 1])

    def test_sixth(self):
        assert cyclotomic(6) == upoly.upoly([1, -1, 1])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic(0)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_product_identity_and_integrality(self, n):
        # prod over divisors of Phi_m = t^n - 1, and all coefficients integral
        prod = upoly.ONE
        for m in range(1, n + 1):
            if n % m == 0:
                prod = upoly.mul(prod, cyclotomic(m))
        assert prod == upoly.upoly([-1] + [0] * (n - 1) + [1])
        assert all(c.denominator == 1 for c in cyclotomic(n))
        if n >= 2:
            assert abs(cyclotomic(n)[0]) == 1


class TestMinimalPolynomial:
    def test_degree_three_is_rational(self):
        # 2*cos(pi/3) = 1
        assert real_subfield_minpoly(3) == upoly.upoly([-1, 1])

    def test_degree_four(self):
        assert real_subfield_minpoly(4) == upoly.upoly([-2, 0, 1])

    def test_degree_five_golden(self):
        assert real_subfield_minpoly(5) == upoly.upoly([-1, -1, 1])

    @pytest.mark.parametrize("d", range(2, 25))
    def test_degree_formula(self, d):
        assert upoly.degree(real_subfield_minpoly(d)) == _totient(2 * d) // 2

    @pytest.mark.parametrize("d", range(2, 13))
    def test_generator_satisfies_chebyshev_identity(self, d):
        # V_{2d}(g) - 2 == 0 where V_k(2 cos a) = 2 cos(k a): an oracle for the
        # minimal polynomial that bypasses the linear-algebra construction.
        v_prev, v = upoly.upoly([2]), upoly.T
        for _ in range(2 * d - 1):
            v_prev, v = v, upoly.sub(upoly.mul(upoly.T, v), v_prev)
        identity = upoly.sub(v, upoly.upoly([2]))
        assert upoly.poly_mod(identity, real_subfield_minpoly(d)) == upoly.ZERO


class TestCriticalPoints:
    def test_rational_case(self):
        field = real_cyclotomic_field(3)
        assert critical_point(field, 1) == Fraction(1, 2)

    def test_middle_point_vanishes(self):
        field = real_cyclotomic_field(4)
        assert critical_point(field, 2) == 0

    def test_half_generator(self):
        field = real_cyclotomic_field(4)
        assert critical_point(field, 1) == field.gen() * Fraction(1, 2)

    def test_range_validation(self):
        field = real_cyclotomic_field(4)
        with pytest.raises(ValueError):
            critical_point(field, 0)
        with pytest.raises(ValueError):
            critical_point(field, 4)

    @pytest.mark.parametrize("d", range(2, 13))
    def test_chebyshev_critical_values(self, d):
        # T_d(c_k) = (-1)^k and T_d'(c_k) = 0, symbolically in the field
        from chebcurve.chebyshev import chebyshev_T

        field = real_cyclotomic_field(d)
        T = chebyshev_T(d)
        T1 = upoly.derivative(T)
        for k in range(1, d):
            lam = critical_point(field, k)
            assert upoly.evaluate(T, lam) == (-1) ** k
            assert upoly.evaluate(T1, lam) == 0

    def test_cos_multiple_folds_negatives(self):
        field = real_cyclotomic_field(5)
        assert cos_multiple(field, -2) == cos_multiple(field, 2)
        assert cos_multiple(field, 0) == 1
        # cos(5*pi/5) = -1
        assert cos_multiple(field, 5) == -1


class TestInverse:
    def test_identity(self):
        field = real_cyclotomic_field(5)
        assert alg_inv(field.one()) == 1

    def test_sqrt2(self):
        field = real_cyclotomic_field(4)
        g = field.gen()
        assert alg_inv(g) == g * Fraction(1, 2)

    def test_golden(self):
        field = real_cyclotomic_field(5)
        g = field.gen()
        assert alg_inv(g) == g - 1

    def test_zero_rejected(self):
        field = real_cyclotomic_field(5)
        with pytest.raises(ZeroDivisionError):
            alg_inv(field.zero())


_fields = [real_cyclotomic_field(d) for d in (4, 5, 7, 8)]
_coeff = st.fractions(
    min_value=-20, max_value=20, max_denominator=6
)


@st.composite
def field_elements(draw):
    field = draw(st.sampled_from(_fields))
    coeffs = draw(st.lists(_coeff, min_size=field.degree, max_size=field.degree))
    return field.element(coeffs)


@st.composite
def field_triples(draw):
    field = draw(st.sampled_from(_fields))

    def elem():
        coeffs = draw(st.lists(_coeff, min_size=field.degree, max_size=field.degree))
        return field.element(coeffs)

    return elem(), elem(), elem()


class TestFieldAxioms:
    @settings(max_examples=60)
    @given(field_triples())
    def test_associativity_and_distributivity(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60)
    @given(field_elements())
    def test_inverse_roundtrip(self, a):
        if a.is_zero():
            return
        assert a * alg_inv(a) == 1

    @settings(max_examples=30)
    @given(field_elements())
    def test_power_consistency(self, a):
        assert a**3 == a * a * a


class TestUPoly:
    def test_divmod_roundtrip(self):
        a = upoly.upoly([1, 0, -3, 2, 5])
        b = upoly.upoly([2, 1, 1])
        q, r = upoly.divmod_poly(a, b)
        assert upoly.add(upoly.mul(q, b), r) == a
        assert upoly.degree(r) < upoly.degree(b)

    def test_xgcd_bezout(self):
        a = upoly.upoly([-1, 0, 1])  # t^2 - 1
        b = upoly.upoly([1, 1])  # t + 1
        g, u, v = upoly.xgcd(a, b)
        assert g == upoly.upoly([1, 1])
        assert upoly.add(upoly.mul(u, a), upoly.mul(v, b)) == g

    @settings(max_examples=40)
    @given(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=5),
        st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=5),
    )
    def test_xgcd_identity_property(self, ca, cb):
        a, b = upoly.upoly(ca), upoly.upoly(cb)
        if not a and not b:
            return
        g, u, v = upoly.xgcd(a, b)
        assert upoly.add(upoly.mul(u, a), upoly.mul(v, b)) == g
        if a:
            assert not upoly.poly_mod(a, g)
        if b:
            assert not upoly.poly_mod(b, g)

    def test_derivative(self):
        assert upoly.derivative(upoly.upoly([5, 3, 0, 2])) == upoly.upoly([3, 0, 6])

    def test_evaluate_horner(self):
        p = upoly.upoly([1, -2, 1])  # (t-1)^2
        assert upoly.evaluate(p, Fraction(1)) == 0
        assert upoly.evaluate(p, Fraction(3)) == 4
