#include "fgl/uni_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fgl {

UniSeries::UniSeries(int order)
{
	if (order < 0)
		throw std::domain_error("UniSeries: order must be >= 0");
	c_.resize(order + 1);
}

UniSeries::UniSeries(std::vector<GradedPoly> coeffs) : c_(std::move(coeffs))
{
	if (c_.empty())
		throw std::domain_error("UniSeries: empty coefficient list");
}

UniSeries UniSeries::constant(const GradedPoly &c, int order)
{
	UniSeries s(order);
	s.c_[0] = c;
	return s;
}

UniSeries UniSeries::identity(int order)
{
	return monomial(GradedPoly(1), 1, order);
}

UniSeries UniSeries::monomial(const GradedPoly &c, int power, int order)
{
	UniSeries s(order);
	if (power < 0 || power > order)
		throw std::out_of_range("UniSeries::monomial: power outside 0..order");
	s.c_[power] = c;
	return s;
}

const GradedPoly &UniSeries::coeff(int n) const
{
	if (n < 0 || n > order())
		throw std::out_of_range("UniSeries::coeff: index outside stored order");
	return c_[n];
}

void UniSeries::set_coeff(int n, const GradedPoly &v)
{
	if (n < 0 || n > order())
		throw std::out_of_range("UniSeries::set_coeff: index outside stored order");
	c_[n] = v;
}

bool UniSeries::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](const GradedPoly &p) { return p.is_zero(); });
}

int UniSeries::valuation() const
{
	for (int n = 0; n <= order(); ++n)
		if (!c_[n].is_zero())
			return n;
	return order() + 1;
}

UniSeries UniSeries::truncated(int n) const
{
	if (n < 0 || n > order())
		throw std::out_of_range("UniSeries::truncated: bad order");
	UniSeries s(n);
	std::copy(c_.begin(), c_.begin() + n + 1, s.c_.begin());
	return s;
}

UniSeries UniSeries::operator-() const
{
	UniSeries r = *this;
	for (auto &p : r.c_)
		p = -p;
	return r;
}

UniSeries operator+(const UniSeries &a, const UniSeries &b)
{
	int n = std::min(a.order(), b.order());
	UniSeries r(n);
	for (int i = 0; i <= n; ++i)
		r.c_[i] = a.c_[i] + b.c_[i];
	return r;
}

UniSeries operator-(const UniSeries &a, const UniSeries &b)
{
	int n = std::min(a.order(), b.order());
	UniSeries r(n);
	for (int i = 0; i <= n; ++i)
		r.c_[i] = a.c_[i] - b.c_[i];
	return r;
}

UniSeries operator*(const UniSeries &a, const UniSeries &b)
{
	int n = std::min(a.order(), b.order());
	UniSeries r(n);
	for (int i = 0; i <= n; ++i) {
		if (a.c_[i].is_zero())
			continue;
		for (int j = 0; i + j <= n; ++j) {
			if (b.c_[j].is_zero())
				continue;
			r.c_[i + j] += a.c_[i] * b.c_[j];
		}
	}
	return r;
}

UniSeries operator*(const GradedPoly &c, const UniSeries &a)
{
	UniSeries r(a.order());
	if (c.is_zero())
		return r;
	for (int i = 0; i <= a.order(); ++i)
		r.c_[i] = c * a.c_[i];
	return r;
}

UniSeries operator*(const Rational &c, const UniSeries &a) { return GradedPoly(c) * a; }

UniSeries UniSeries::derivative() const
{
	if (order() == 0)
		throw std::domain_error("UniSeries::derivative: order 0 series has no derivative window");
	UniSeries r(order() - 1);
	for (int n = 1; n <= order(); ++n)
		r.c_[n - 1] = Rational(n) * c_[n];
	return r;
}

UniSeries UniSeries::antiderivative() const
{
	UniSeries r(order() + 1);
	for (int n = 0; n <= order(); ++n)
		r.c_[n + 1] = Rational(1, n + 1) * c_[n];
	return r;
}

UniSeries UniSeries::shifted_up(int k) const
{
	if (k < 0)
		throw std::domain_error("UniSeries::shifted_up: negative shift");
	UniSeries r(order() + k);
	for (int n = 0; n <= order(); ++n)
		r.c_[n + k] = c_[n];
	return r;
}

UniSeries UniSeries::shifted_down(int k) const
{
	if (k < 0 || k > order())
		throw std::domain_error("UniSeries::shifted_down: bad shift");
	for (int n = 0; n < k; ++n)
		if (!c_[n].is_zero())
			throw std::domain_error("UniSeries::shifted_down: division by x^k not exact");
	UniSeries r(order() - k);
	for (int n = k; n <= order(); ++n)
		r.c_[n - k] = c_[n];
	return r;
}

UniSeries UniSeries::reciprocal() const
{
	if (!c_[0].is_constant() || c_[0].is_zero())
		throw std::domain_error("UniSeries::reciprocal: constant term is not invertible");
	Rational c0 = c_[0].constant_value();
	UniSeries r(order());
	r.c_[0] = GradedPoly(Rational(1) / c0);
	for (int m = 1; m <= order(); ++m) {
		GradedPoly s;
		for (int j = 1; j <= m; ++j)
			s += c_[j] * r.c_[m - j];
		r.c_[m] = (Rational(-1) / c0) * s;
	}
	return r;
}

UniSeries UniSeries::sqrt() const
{
	if (c_[0] != GradedPoly(1))
		throw std::domain_error("UniSeries::sqrt: constant term must be 1");
	UniSeries r(order());
	r.c_[0] = GradedPoly(1);
	for (int m = 1; m <= order(); ++m) {
		GradedPoly s;
		for (int j = 1; j < m; ++j)
			s += r.c_[j] * r.c_[m - j];
		r.c_[m] = Rational(1, 2) * (c_[m] - s);
	}
	return r;
}

UniSeries UniSeries::compose(const UniSeries &inner) const
{
	if (!inner.c_[0].is_zero())
		throw std::domain_error("UniSeries::compose: inner constant term must vanish");
	int n = std::min(order(), inner.order());
	UniSeries in = inner.truncated(n);
	UniSeries r = UniSeries::constant(c_[n], n);
	for (int k = n - 1; k >= 0; --k) {
		r = r * in;
		r.c_[0] += c_[k];
	}
	return r;
}

UniSeries UniSeries::revert() const
{
	if (!c_[0].is_zero() || c_[1] != GradedPoly(1))
		throw std::domain_error("UniSeries::revert: series must be x + O(x^2)");
	int n = order();
	UniSeries b = UniSeries::identity(n);
	// (this o b) has its x^m coefficient linear in b_m with unit factor, so
	// each step reads the new coefficient off the truncated composition.
	for (int m = 2; m <= n; ++m) {
		UniSeries comp = truncated(m).compose(b.truncated(m));
		b.c_[m] = -comp.coeff(m);
	}
	return b;
}

UniSeries UniSeries::div_exact(const UniSeries &num, const UniSeries &den)
{
	int k = den.valuation();
	if (k > den.order())
		throw std::domain_error("UniSeries::div_exact: division by zero series");
	UniSeries unit = den.shifted_down(k);
	UniSeries reduced = num.truncated(std::min(num.order(), den.order())).shifted_down(k);
	return reduced * unit.reciprocal();
}

std::optional<std::pair<int, GradedPoly>> UniSeries::first_nonzero() const
{
	for (int n = 0; n <= order(); ++n)
		if (!c_[n].is_zero())
			return std::make_pair(n, c_[n]);
	return std::nullopt;
}

std::string UniSeries::str(const std::array<std::string, 4> &names, const std::string &var) const
{
	std::string out;
	for (int n = 0; n <= order(); ++n) {
		if (!out.empty())
			out += "\n";
		out += var + "^" + std::to_string(n) + ": " + c_[n].str(names);
	}
	return out;
}

std::ostream &operator<<(std::ostream &os, const UniSeries &s) { return os << s.str(); }

} // namespace fgl
