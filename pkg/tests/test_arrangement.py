"""The rational-arrangement certificate and its building blocks."""

import random
import pytest

from chebcurve.arrangement import (
    count_distinct_singular_points,
    is_nodal,
    is_reduced,
    mpoly_gcd,
    rationality_test,
)
from chebcurve.chebyshev import curve_polynomial
from chebcurve.polyring import MPoly, parse


class TestGcd:
    def test_coprime(self):
        g = mpoly_gcd(parse("x + y"), parse("x - y"))
        assert g.degree() == 0

    def test_common_factor(self):
        p = parse("x + y") * parse("x^2 + y*z")
        q = parse("x + y") * parse("z^3 - x*y^2")
        g = mpoly_gcd(p, q)
        assert g == parse("x + y")

    def test_repeated_factor(self):
        p = parse("x - z") * parse("x - z") * parse("y")
        g = mpoly_gcd(p, p.derivative(0))
        assert g == parse("x*y - y*z")

    def test_univariate_content(self):
        g = mpoly_gcd(parse("2*x^2"), parse("4*x*y"))
        assert g == parse("x")


class TestIsReduced:
    def test_three_axes(self):
        assert is_reduced(parse("x*y*z"))

    def test_double_line(self):
        assert not is_reduced(parse("x^2*y"))

    def test_chebyshev_sextic(self):
        assert is_reduced(curve_polynomial(6))

    def test_double_conic(self):
        conic = parse("x^2 + y^2 - z^2")
        assert not is_reduced(conic * conic)


class TestSingularPointCount:
    def test_quartic_grid(self):
        assert count_distinct_singular_points(curve_polynomial(4)) == 4

    def test_three_axes(self):
        assert count_distinct_singular_points(parse("x*y*z")) == 3

    def test_line_meets_cubic(self):
        f = parse("x + y + z") * parse("x^3 + y^3 + z^3")
        assert count_distinct_singular_points(f) == 3

    def test_cusp_counts_once(self):
        assert count_distinct_singular_points(parse("z*y^2 - x^3")) == 1

    def test_smooth_curve_has_none(self):
        assert count_distinct_singular_points(parse("x^4 + y^4 + z^4")) == 0

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_seed_invariance(self, seed):
        assert count_distinct_singular_points(curve_polynomial(5), seed=seed) == 8

    def test_positive_dimensional_locus_raises(self):
        from chebcurve.arrangement import SingularLocusError

        with pytest.raises(SingularLocusError):
            count_distinct_singular_points(parse("x^2*y"))


class TestIsNodal:
    def test_chebyshev_quintic(self):
        assert is_nodal(curve_polynomial(5))

    def test_cusp_is_not(self):
        assert not is_nodal(parse("z*y^2 - x^3"))

    def test_three_axes(self):
        assert is_nodal(parse("x*y*z"))


class TestRationalityTest:
    def test_chebyshev_quartic(self):
        rep = rationality_test(curve_polynomial(4))
        assert rep.verdict == "all_rational"
        assert rep.tau == 4
        assert rep.dim_at_2d_minus_3 == 4
        assert rep.genus_sum == 0

    def test_line_plus_cubic(self):
        rep = rationality_test(parse("x + y + z") * parse("x^3 + y^3 + z^3"))
        assert rep.verdict == "has_irrational_component"
        assert rep.tau == 3
        assert rep.dim_at_2d_minus_3 == 4
        assert rep.genus_sum == 1

    def test_nodal_cubic(self):
        rep = rationality_test(parse("y^2*z - x^3 - x^2*z"))
        assert rep.verdict == "all_rational"
        assert rep.tau == 1
        assert rep.dim_at_2d_minus_3 == 1

    def test_cusp(self):
        rep = rationality_test(parse("z*y^2 - x^3"))
        assert rep.verdict == "not_nodal"
        assert rep.tau == 2
        assert rep.distinct_singular_points == 1

    def test_not_reduced(self):
        rep = rationality_test(parse("x^2*y"))
        assert rep.verdict == "not_reduced"
        assert rep.tau is None

    def test_three_axes(self):
        rep = rationality_test(parse("x*y*z"))
        assert rep.verdict == "all_rational"
        assert rep.tau == 3 and rep.dim_at_2d_minus_3 == 3

    def test_smooth_quartic_reports_genus(self):
        rep = rationality_test(parse("x^4 + y^4 + z^4"))
        assert rep.verdict == "has_irrational_component"
        assert rep.tau == 0
        assert rep.genus_sum == 3

    def test_rejects_low_degree(self):
        with pytest.raises(ValueError):
            rationality_test(parse("x^2 + y*z"))


def _random_lines(rng, n):
    while True:
        lines = [
            MPoly(
                3,
                {
                    (1, 0, 0): rng.randint(-5, 5),
                    (0, 1, 0): rng.randint(-5, 5),
                    (0, 0, 1): rng.randint(-5, 5),
                },
            )
            for _ in range(n)
        ]
        if all(not l.is_zero() for l in lines):
            f = lines[0]
            for l in lines[1:]:
                f = f * l
            if is_reduced(f):
                return f


class TestLineArrangements:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_general_position_counts(self, n):
        rng = random.Random(100 + n)
        rep = rationality_test(_random_lines(rng, n))
        assert rep.verdict == "all_rational"
        assert rep.tau == n * (n - 1) // 2

    def test_degree_eight_curve(self):
        rep = rationality_test(curve_polynomial(8))
        assert rep.verdict == "all_rational"
        assert rep.tau == 24

    @pytest.mark.parametrize("d", range(3, 8))
    def test_nodal_corpus_tail_behaviour(self, d):
        # stabilized dims equal the node count and the tail never increases
        from chebcurve.hilbert import milnor_profile

        prof = milnor_profile(curve_polynomial(d))
        rep = rationality_test(curve_polynomial(d))
        assert rep.genus_sum == 0
        assert prof.dims[-1] == rep.tau


class TestCompanionCurve:
    """The difference curve is itself a rational arrangement whose node count
    is the complementary grid size."""

    @pytest.mark.parametrize("d", range(4, 8))
    def test_companion_is_rational_arrangement(self, d):
        from chebcurve.chebyshev import curve_affine
        from chebcurve.hilbert import expected_node_count
        from chebcurve.polyring import homogenize

        f = homogenize(curve_affine(d, "minus"), d)
        rep = rationality_test(f)
        assert rep.verdict == "all_rational"
        assert rep.tau == (d - 1) ** 2 - expected_node_count(d)


class TestKnownArrangements:
    """Verdicts with node counts known independently from intersection theory."""

    def test_two_conics(self):
        f = parse("x^2 + y^2 - z^2") * parse("x^2 + 2*y^2 - 3*z^2 + x*y")
        rep = rationality_test(f)
        assert rep.verdict == "all_rational"
        assert rep.tau == 4  # Bezout: 2 * 2

    def test_conic_and_line(self):
        f = parse("x^2 + y^2 - z^2") * parse("x + 2*y + 3*z")
        rep = rationality_test(f)
        assert rep.verdict == "all_rational"
        assert rep.tau == 2

    def test_smooth_cubic_and_conic(self):
        f = parse("x^3 + y^3 + z^3") * parse("x^2 + y^2 - 2*z^2 + x*y")
        rep = rationality_test(f)
        assert rep.verdict == "has_irrational_component"
        assert rep.tau == 6  # Bezout: 3 * 2
        assert rep.genus_sum == 1  # the smooth cubic

    def test_nodal_cubic_and_line(self):
        f = parse("y^2*z - x^3 - x^2*z") * parse("x + 3*y + 2*z")
        rep = rationality_test(f)
        assert rep.verdict == "all_rational"
        assert rep.tau == 4  # own node plus three transversal crossings


class TestNodalTailMonotonicity:
    CORPUS = [
        parse("x*y*z"),
        parse("y^2*z - x^3 - x^2*z"),
        parse("x + y + z") * parse("x^3 + y^3 + z^3"),
        curve_polynomial(5),
        _random_lines(random.Random(42), 4),
    ]

    @pytest.mark.parametrize("f", CORPUS)
    def test_dims_non_increasing_after_2d_minus_3(self, f):
        from chebcurve.hilbert import milnor_profile

        prof = milnor_profile(f)
        d = f.degree()
        dims = prof.dims
        assert all(dims[k - 1] >= dims[k] for k in range(2 * d - 3, len(dims)))
        assert dims[-1] == prof.tau
        assert prof.tau >= 0
