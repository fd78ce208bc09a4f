#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/graded_poly.hpp"
#include "oracles.hpp"

using namespace fgl;

namespace {
const GradedPoly P1 = GradedPoly::variable(0);
const GradedPoly P2 = GradedPoly::variable(1);
const GradedPoly P3 = GradedPoly::variable(2);
const GradedPoly P4 = GradedPoly::variable(3);
} // namespace

TEST_CASE("rational canonical form")
{
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(1, -2) == Rational(-1, 2));
	CHECK(Rational(1, -2).den() == 2);
	CHECK(Rational(0, 5) == Rational(0));
	CHECK(Rational(0).str() == "0");
	CHECK(Rational(-3, 4).str() == "-3/4");
	CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
	CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational conversions")
{
	CHECK(Rational::from_double(0.5) == Rational(1, 2));
	CHECK(Rational::from_double(0.375) == Rational(3, 8));
	CHECK(Rational::from_decimal("-12", "8") == Rational(-3, 2));
	// beyond 64-bit range
	Rational big = Rational::from_decimal("1267650600228229401496703205376", "3"); // 2^100 / 3
	CHECK(big.num().get_str() == "1267650600228229401496703205376");
	CHECK((big * Rational(3)).is_integer());
	CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("polynomial addition")
{
	CHECK((P1 + (-P1)).is_zero());
	CHECK((P1 * P1 + P2).terms().size() == 2);
	GradedPoly b2 = Rational(1, 16) * (P1 * P1) - Rational(1, 4) * P2;
	CHECK(b2 + Rational(1, 4) * P2 == Rational(1, 16) * (P1 * P1));
}

TEST_CASE("polynomial multiplication")
{
	CHECK(P1 * P1 == GradedPoly::term(Exponents{{2, 0, 0, 0}}, Rational(1)));
	CHECK((Rational(1, 2) * P1) * (Rational(1, 2) * P1) == Rational(1, 4) * (P1 * P1));
	CHECK((P1 + P2) * (P1 - P2) == P1 * P1 - P2 * P2);
}

TEST_CASE("weights")
{
	CHECK((P1 * P1).weight() == 4);
	CHECK((P1 * P1 * P2).weight() == 8);
	CHECK(!(P1 + P2).weight().has_value());
	CHECK_THROWS_AS(GradedPoly().weight(), std::domain_error);
	CHECK(P4.weight() == 8);
}

TEST_CASE("exact evaluation")
{
	std::array<Rational, 4> pt{Rational(2), Rational(1), Rational(0), Rational(0)};
	CHECK((P1 * P1 - P2).eval(pt) == Rational(3));

	std::mt19937 rng(11);
	for (int t = 0; t < 20; ++t) {
		GradedPoly a = oracles::random_poly(rng);
		CHECK(a.eval({Rational(0), Rational(0), Rational(0), Rational(0)}) ==
		      a.coeff(Exponents{}));
	}

	// b2 constant at the genus parameters with k^2 = 1/4: p2 = 2(1+1/4) = 5/2
	GradedPoly b2 = Rational(1, 16) * (P1 * P1) - Rational(1, 4) * P2;
	std::array<Rational, 4> jac{Rational(0), Rational(5, 2), Rational(0), Rational(7)};
	CHECK(b2.eval(jac) == Rational(-5, 8));
}

TEST_CASE("double evaluation")
{
	CHECK(P1.eval_double({0.5, 0, 0, 0}) == 0.5);
	CHECK(GradedPoly(1).eval_double({3.0, -2.0, 0.7, 9.0}) == 1.0);
	GradedPoly p = Rational(1, 2) * P2 - Rational(1, 8) * (P1 * P1);
	CHECK(p.eval_double({1.0, 2.0, 0.0, 0.0}) == doctest::Approx(0.875).epsilon(1e-15));
}

TEST_CASE("ring axioms on random polynomials")
{
	std::mt19937 rng(23);
	for (int t = 0; t < 30; ++t) {
		GradedPoly a = oracles::random_poly(rng);
		GradedPoly b = oracles::random_poly(rng);
		GradedPoly c = oracles::random_poly(rng);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("weight multiplicativity for homogeneous polynomials")
{
	GradedPoly a = P1 * P1 + Rational(4) * P2;           // weight 4
	GradedPoly b = P1 * P1 * P1 + Rational(-2) * P1 * P2; // weight 6
	CHECK(a.weight() == 4);
	CHECK(b.weight() == 6);
	CHECK((a * b).weight() == 10);

	std::mt19937 rng(31);
	std::uniform_int_distribution<int> exp(0, 2);
	for (int t = 0; t < 20; ++t) {
		Exponents e1, e2;
		for (int i = 0; i < 4; ++i) {
			e1.e[i] = exp(rng);
			e2.e[i] = exp(rng);
		}
		GradedPoly m1 = GradedPoly::term(e1, oracles::random_rational(rng) + Rational(1, 10));
		GradedPoly m2 = GradedPoly::term(e2, Rational(1));
		CHECK((m1 * m2).weight() == *m1.weight() + *m2.weight());
	}
}

TEST_CASE("evaluation is a ring homomorphism")
{
	std::mt19937 rng(47);
	for (int t = 0; t < 20; ++t) {
		GradedPoly a = oracles::random_poly(rng);
		GradedPoly b = oracles::random_poly(rng);
		std::array<Rational, 4> pt{oracles::random_rational(rng), oracles::random_rational(rng),
		                           oracles::random_rational(rng), oracles::random_rational(rng)};
		CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
		CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
	}
}
