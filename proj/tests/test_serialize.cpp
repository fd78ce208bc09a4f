#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/canonical.hpp"
#include "fgl/serialize.hpp"
#include "oracles.hpp"

using namespace fgl;
using nlohmann::json;

TEST_CASE("polynomial wire format")
{
	GradedPoly P1 = GradedPoly::variable(0);
	GradedPoly P2 = GradedPoly::variable(1);
	GradedPoly b2 = Rational(1, 16) * (P1 * P1) - Rational(1, 4) * P2;

	json j = poly_to_json(b2);
	json expected = json::array({{{"e", {0, 1, 0, 0}}, {"num", "-1"}, {"den", "4"}},
	                             {{"e", {2, 0, 0, 0}}, {"num", "1"}, {"den", "16"}}});
	CHECK(j == expected);
	CHECK(poly_from_json(j) == b2);

	CHECK(poly_to_json(GradedPoly()) == json::array());
	CHECK(poly_from_json(json::array()).is_zero());
}

TEST_CASE("coefficients beyond 64-bit range")
{
	Rational big = Rational::from_decimal("1267650600228229401496703205376", "243"); // 2^100/3^5
	GradedPoly p = GradedPoly::term(Exponents{{1, 2, 3, 4}}, big);
	json j = poly_to_json(p);
	CHECK(j[0]["num"] == "1267650600228229401496703205376");
	CHECK(poly_from_json(j) == p);
}

TEST_CASE("univariate wire format")
{
	CanonicalSeries cs = CanonicalSeries::build(ParamSet::generic(), 6);
	json j = series_to_json(cs.B);
	CHECK(j["order"] == 6);
	CHECK(j["variable"] == "x");
	CHECK(j["coefficients"].size() == 7);
	CHECK(j["coefficients"][1]["x_power"] == 1);
	CHECK(series_from_json(j) == cs.B);
}

TEST_CASE("round trips on random series")
{
	std::mt19937 rng(55);
	for (int t = 0; t < 15; ++t) {
		GradedPoly p = oracles::random_poly(rng);
		CHECK(poly_from_json(poly_to_json(p)) == p);

		UniSeries s = oracles::random_series(rng, 7);
		CHECK(series_from_json(series_to_json(s)) == s);

		BiSeries b = oracles::random_biseries(rng, 5);
		CHECK(biseries_from_json(biseries_to_json(b)) == b);
	}
}

TEST_CASE("bivariate wire format")
{
	BiSeries s(3);
	s.set_coeff(1, 2, GradedPoly(Rational(7, 2)));
	json j = biseries_to_json(s);
	CHECK(j["order"] == 3);
	CHECK(j["variables"] == json::array({"x", "y"}));
	CHECK(j["coefficients"][0]["powers"] == json::array({1, 2}));
	CHECK(biseries_from_json(j) == s);
}
