#include "fgl/serialize.hpp"

namespace fgl {

using nlohmann::json;

json poly_to_json(const GradedPoly &p)
{
	json terms = json::array();
	for (const auto &[e, c] : p.terms()) {
		terms.push_back({{"e", e.e},
		                 {"num", c.num().get_str()},
		                 {"den", c.den().get_str()}});
	}
	return terms;
}

GradedPoly poly_from_json(const json &j)
{
	GradedPoly p;
	for (const auto &t : j) {
		Exponents e;
		for (int i = 0; i < 4; ++i)
			e.e[i] = t.at("e").at(i).get<int>();
		Rational c = Rational::from_decimal(t.at("num").get<std::string>(),
		                                    t.at("den").get<std::string>());
		p += GradedPoly::term(e, c);
	}
	return p;
}

json series_to_json(const UniSeries &s, const std::string &variable)
{
	json coeffs = json::array();
	for (int n = 0; n <= s.order(); ++n)
		coeffs.push_back({{"x_power", n}, {"poly", poly_to_json(s.coeff(n))}});
	return {{"order", s.order()}, {"variable", variable}, {"coefficients", coeffs}};
}

UniSeries series_from_json(const json &j)
{
	UniSeries s(j.at("order").get<int>());
	for (const auto &c : j.at("coefficients"))
		s.set_coeff(c.at("x_power").get<int>(), poly_from_json(c.at("poly")));
	return s;
}

json biseries_to_json(const BiSeries &s)
{
	json coeffs = json::array();
	for (const auto &[k, v] : s.terms())
		coeffs.push_back({{"powers", {k.first, k.second}}, {"poly", poly_to_json(v)}});
	return {{"order", s.order()},
	        {"variables", {"x", "y"}},
	        {"coefficients", coeffs}};
}

BiSeries biseries_from_json(const json &j)
{
	BiSeries s(j.at("order").get<int>());
	for (const auto &c : j.at("coefficients"))
		s.set_coeff(c.at("powers").at(0).get<int>(), c.at("powers").at(1).get<int>(),
		            poly_from_json(c.at("poly")));
	return s;
}

} // namespace fgl
