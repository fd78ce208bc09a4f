#include "fgl/graded_poly.hpp"

#include <ostream>
#include <stdexcept>

namespace fgl {

GradedPoly::GradedPoly(const Rational &c)
{
	if (!c.is_zero())
		terms_[Exponents{}] = c;
}

GradedPoly GradedPoly::variable(int i)
{
	if (i < 0 || i >= 4)
		throw std::out_of_range("GradedPoly::variable: index must be 0..3");
	Exponents e;
	e.e[i] = 1;
	return term(e, Rational(1));
}

GradedPoly GradedPoly::term(const Exponents &e, const Rational &c)
{
	GradedPoly p;
	if (!c.is_zero())
		p.terms_[e] = c;
	return p;
}

bool GradedPoly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational GradedPoly::constant_value() const
{
	if (!is_constant())
		throw std::domain_error("GradedPoly::constant_value: polynomial is not constant");
	return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational GradedPoly::coeff(const Exponents &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPoly::weight() const
{
	if (is_zero())
		throw std::domain_error("GradedPoly::weight: zero polynomial has no weight");
	int w = terms_.begin()->first.weight();
	for (const auto &[e, c] : terms_)
		if (e.weight() != w)
			return std::nullopt;
	return w;
}

void GradedPoly::prune()
{
	for (auto it = terms_.begin(); it != terms_.end();) {
		if (it->second.is_zero())
			it = terms_.erase(it);
		else
			++it;
	}
}

GradedPoly GradedPoly::operator-() const
{
	GradedPoly r = *this;
	for (auto &[e, c] : r.terms_)
		c = -c;
	return r;
}

GradedPoly &GradedPoly::operator+=(const GradedPoly &o)
{
	for (const auto &[e, c] : o.terms_)
		terms_[e] += c;
	prune();
	return *this;
}

GradedPoly &GradedPoly::operator-=(const GradedPoly &o)
{
	for (const auto &[e, c] : o.terms_)
		terms_[e] -= c;
	prune();
	return *this;
}

GradedPoly operator*(const GradedPoly &a, const GradedPoly &b)
{
	GradedPoly r;
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_)
			r.terms_[ea + eb] += ca * cb;
	r.prune();
	return r;
}

GradedPoly operator*(const Rational &c, const GradedPoly &a)
{
	if (c.is_zero())
		return GradedPoly();
	GradedPoly r = a;
	for (auto &[e, v] : r.terms_)
		v *= c;
	return r;
}

GradedPoly GradedPoly::pow(int n) const
{
	if (n < 0)
		throw std::domain_error("GradedPoly::pow: negative exponent");
	GradedPoly r(1);
	GradedPoly base = *this;
	for (; n > 0; n >>= 1) {
		if (n & 1)
			r = r * base;
		if (n > 1)
			base = base * base;
	}
	return r;
}

Rational GradedPoly::eval(const std::array<Rational, 4> &point) const
{
	Rational sum(0);
	for (const auto &[e, c] : terms_) {
		Rational m = c;
		for (int i = 0; i < 4; ++i)
			for (int k = 0; k < e.e[i]; ++k)
				m *= point[i];
		sum += m;
	}
	return sum;
}

GradedPoly GradedPoly::subst(const std::array<GradedPoly, 4> &point) const
{
	GradedPoly sum;
	for (const auto &[e, c] : terms_) {
		GradedPoly m(c);
		for (int i = 0; i < 4; ++i)
			for (int k = 0; k < e.e[i]; ++k)
				m = m * point[i];
		sum += m;
	}
	return sum;
}

namespace {

// Horner over variable `v`: group terms by the exponent of v, recurse on the
// remaining variables, then fold the groups from the highest power down.
double horner(const GradedPoly::TermMap &terms, int v, const std::array<double, 4> &point)
{
	if (terms.empty())
		return 0.0;
	if (v == 4) {
		double s = 0.0;
		for (const auto &[e, c] : terms)
			s += c.to_double();
		return s;
	}
	std::map<int, GradedPoly::TermMap> groups;
	for (const auto &[e, c] : terms) {
		Exponents stripped = e;
		stripped.e[v] = 0;
		groups[e.e[v]][stripped] = c;
	}
	int top = groups.rbegin()->first;
	double acc = 0.0;
	for (int k = top; k >= 0; --k) {
		acc *= point[v];
		auto it = groups.find(k);
		if (it != groups.end())
			acc += horner(it->second, v + 1, point);
	}
	return acc;
}

} // namespace

double GradedPoly::eval_double(const std::array<double, 4> &point) const
{
	return horner(terms_, 0, point);
}

std::string GradedPoly::str(const std::array<std::string, 4> &names) const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[e, c] : terms_) {
		Rational a = c;
		if (first) {
			if (a.sign() < 0) {
				out += "-";
				a = -a;
			}
		} else {
			out += a.sign() < 0 ? " - " : " + ";
			if (a.sign() < 0)
				a = -a;
		}
		first = false;

		std::string mono;
		for (int i = 0; i < 4; ++i) {
			if (e.e[i] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += names[i];
			if (e.e[i] > 1)
				mono += "^" + std::to_string(e.e[i]);
		}
		if (mono.empty())
			out += a.str();
		else if (a == Rational(1))
			out += mono;
		else
			out += a.str() + "*" + mono;
	}
	return out;
}

std::ostream &operator<<(std::ostream &os, const GradedPoly &p) { return os << p.str(); }

} // namespace fgl
