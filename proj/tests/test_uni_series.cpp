#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace fgl;

namespace {
const GradedPoly P1 = GradedPoly::variable(0);

UniSeries from_list(std::vector<GradedPoly> v) { return UniSeries(std::move(v)); }
} // namespace

TEST_CASE("arithmetic basics")
{
	UniSeries one_plus = from_list({GradedPoly(1), GradedPoly(1), GradedPoly(), GradedPoly()});
	UniSeries one_minus = from_list({GradedPoly(1), GradedPoly(-1), GradedPoly(), GradedPoly()});
	UniSeries prod = one_plus * one_minus;
	CHECK(prod == from_list({GradedPoly(1), GradedPoly(), GradedPoly(-1), GradedPoly()}));

	// truncation: x*x at order 1 has no representable terms
	UniSeries x1 = UniSeries::identity(1);
	CHECK((x1 * x1).is_zero());

	UniSeries s = from_list({GradedPoly(1), P1, GradedPoly()});
	CHECK(s * s == from_list({GradedPoly(1), Rational(2) * P1, P1 * P1}));
}

TEST_CASE("derivative and antiderivative")
{
	UniSeries x2 = UniSeries::monomial(GradedPoly(1), 2, 4);
	CHECK(x2.derivative() == UniSeries::monomial(GradedPoly(2), 1, 3));
	CHECK(UniSeries::constant(GradedPoly(5), 3).derivative().is_zero());

	UniSeries s = from_list({GradedPoly(1), Rational(1, 2) * P1});
	CHECK(s.derivative() == UniSeries::constant(Rational(1, 2) * P1, 0));
	CHECK(UniSeries::constant(GradedPoly(1), 2).antiderivative() ==
	      UniSeries::monomial(GradedPoly(1), 1, 3));
	CHECK(UniSeries::identity(2).antiderivative() ==
	      UniSeries::monomial(Rational(1, 2) * GradedPoly(1), 2, 3));
	CHECK(s.antiderivative() == from_list({GradedPoly(), GradedPoly(1), Rational(1, 4) * P1}));

	std::mt19937 rng(5);
	for (int t = 0; t < 10; ++t) {
		UniSeries a = oracles::random_series(rng, 8);
		CHECK(a.antiderivative().derivative() == a);
	}
}

TEST_CASE("reciprocal")
{
	UniSeries g = from_list({GradedPoly(1), GradedPoly(-1), GradedPoly(), GradedPoly(),
	                         GradedPoly()});
	UniSeries r = g.reciprocal(); // 1/(1-x) = 1 + x + x^2 + ...
	for (int n = 0; n <= 4; ++n)
		CHECK(r.coeff(n) == GradedPoly(1));

	UniSeries h = from_list({GradedPoly(1), P1, GradedPoly(), GradedPoly()});
	UniSeries hr = h.reciprocal(); // alternating powers of p1
	CHECK(hr.coeff(0) == GradedPoly(1));
	CHECK(hr.coeff(1) == -P1);
	CHECK(hr.coeff(2) == P1 * P1);
	CHECK(hr.coeff(3) == -(P1 * P1 * P1));

	std::mt19937 rng(7);
	for (int t = 0; t < 10; ++t) {
		UniSeries a = oracles::random_unit(rng, 8);
		CHECK(a * a.reciprocal() == UniSeries::constant(GradedPoly(1), 8));
	}
	CHECK_THROWS_AS(UniSeries::identity(3).reciprocal(), std::domain_error);
	CHECK_THROWS_AS(UniSeries::constant(P1, 3).reciprocal(), std::domain_error);
}

TEST_CASE("square root")
{
	UniSeries sq = from_list({GradedPoly(1), GradedPoly(2), GradedPoly(1), GradedPoly()});
	CHECK(sq.sqrt() == from_list({GradedPoly(1), GradedPoly(1), GradedPoly(), GradedPoly()}));
	CHECK(UniSeries::constant(GradedPoly(1), 5).sqrt() ==
	      UniSeries::constant(GradedPoly(1), 5));

	std::mt19937 rng(9);
	for (int t = 0; t < 10; ++t) {
		UniSeries a = oracles::random_unit(rng, 8);
		UniSeries s = a.sqrt();
		CHECK(s * s == a);
	}
	CHECK_THROWS_AS(UniSeries::constant(GradedPoly(2), 3).sqrt(), std::domain_error);
}

TEST_CASE("composition")
{
	UniSeries outer = from_list({GradedPoly(1), GradedPoly(1), GradedPoly(), GradedPoly()});
	UniSeries inner = UniSeries::monomial(GradedPoly(1), 2, 3);
	CHECK(outer.compose(inner) ==
	      from_list({GradedPoly(1), GradedPoly(), GradedPoly(1), GradedPoly()}));

	std::mt19937 rng(13);
	UniSeries f = oracles::random_series(rng, 6);
	CHECK(f.compose(UniSeries::identity(6)) == f);

	// (x + x^2) o (x - x^2), frozen from the direct expansion
	// (x - x^2) + (x - x^2)^2 = x - 2x^3 + x^4
	UniSeries o2 = from_list({GradedPoly(), GradedPoly(1), GradedPoly(1), GradedPoly(),
	                          GradedPoly()});
	UniSeries i2 = from_list({GradedPoly(), GradedPoly(1), GradedPoly(-1), GradedPoly(),
	                          GradedPoly()});
	UniSeries expansion = i2 + i2 * i2; // the oracle: expand by hand
	CHECK(o2.compose(i2) == expansion);
	CHECK(expansion ==
	      from_list({GradedPoly(), GradedPoly(1), GradedPoly(), GradedPoly(-2), GradedPoly(1)}));

	CHECK_THROWS_AS(outer.compose(UniSeries::constant(GradedPoly(1), 3)), std::domain_error);
}

TEST_CASE("chain rule")
{
	std::mt19937 rng(17);
	for (int t = 0; t < 8; ++t) {
		UniSeries f = oracles::random_series(rng, 8);
		UniSeries g = oracles::random_series(rng, 8);
		g.set_coeff(0, GradedPoly());
		UniSeries lhs = f.compose(g).derivative();
		UniSeries rhs = f.derivative().compose(g.truncated(7)) * g.derivative();
		CHECK(lhs == rhs);
	}
}

TEST_CASE("reversion")
{
	CHECK(UniSeries::identity(5).revert() == UniSeries::identity(5));

	// revert(x - x^2) = x + x^2 + 2x^3 + 5x^4 + 14x^5 (Catalan numbers)
	UniSeries a(5);
	a.set_coeff(1, GradedPoly(1));
	a.set_coeff(2, GradedPoly(-1));
	UniSeries b = a.revert();
	CHECK(b.coeff(2) == GradedPoly(1));
	CHECK(b.coeff(3) == GradedPoly(2));
	CHECK(b.coeff(4) == GradedPoly(5));
	CHECK(b.coeff(5) == GradedPoly(14));
	CHECK(b == oracles::lagrange_revert(a));

	std::mt19937 rng(19);
	UniSeries x = UniSeries::identity(7);
	for (int t = 0; t < 8; ++t) {
		UniSeries f = oracles::random_reversible(rng, 7);
		UniSeries g = f.revert();
		CHECK(f.compose(g) == x);
		CHECK(g.compose(f) == x);
		CHECK(g == oracles::lagrange_revert(f));
	}
	CHECK_THROWS_AS(UniSeries::monomial(GradedPoly(1), 2, 4).revert(), std::domain_error);
}

TEST_CASE("exact division")
{
	// (x^2 - x^3)/x^2 = 1 - x
	UniSeries num(4);
	num.set_coeff(2, GradedPoly(1));
	num.set_coeff(3, GradedPoly(-1));
	UniSeries den = UniSeries::monomial(GradedPoly(1), 2, 4);
	CHECK(UniSeries::div_exact(num, den) ==
	      from_list({GradedPoly(1), GradedPoly(-1), GradedPoly()}));

	UniSeries x = UniSeries::identity(3);
	CHECK(UniSeries::div_exact(x, x) == UniSeries::constant(GradedPoly(1), 2));

	// (x + p1 x^2)/(1 + p1 x) = x
	UniSeries n2(4), d2(4);
	n2.set_coeff(1, GradedPoly(1));
	n2.set_coeff(2, P1);
	d2.set_coeff(0, GradedPoly(1));
	d2.set_coeff(1, P1);
	CHECK(UniSeries::div_exact(n2, d2) == UniSeries::identity(4));

	// remainder -> error
	UniSeries odd(3);
	odd.set_coeff(1, GradedPoly(1));
	CHECK_THROWS_AS(UniSeries::div_exact(odd, UniSeries::monomial(GradedPoly(1), 2, 3)),
	                std::domain_error);
	// non-invertible leading coefficient -> error
	CHECK_THROWS_AS(UniSeries::div_exact(n2, UniSeries::constant(P1, 4)), std::domain_error);

	std::mt19937 rng(29);
	for (int t = 0; t < 8; ++t) {
		UniSeries a = oracles::random_series(rng, 6);
		UniSeries b = oracles::random_unit(rng, 6);
		CHECK(UniSeries::div_exact(a * b, b) == a);
	}
}

TEST_CASE("shifts")
{
	UniSeries s = from_list({GradedPoly(1), P1});
	CHECK(s.shifted_up(2).coeff(2) == GradedPoly(1));
	CHECK(s.shifted_up(2).order() == 3);
	CHECK(s.shifted_up(2).shifted_down(2) == s);
	CHECK_THROWS_AS(s.shifted_down(1), std::domain_error);
}
