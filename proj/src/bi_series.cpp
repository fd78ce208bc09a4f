#include "fgl/bi_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace fgl {

BiSeries::BiSeries(int order) : order_(order)
{
	if (order < 0)
		throw std::domain_error("BiSeries: order must be >= 0");
}

BiSeries BiSeries::constant(const GradedPoly &c, int order)
{
	BiSeries s(order);
	s.add_term(0, 0, c);
	return s;
}

BiSeries BiSeries::monomial(const GradedPoly &c, int i, int j, int order)
{
	if (i < 0 || j < 0 || i + j > order)
		throw std::out_of_range("BiSeries::monomial: powers outside window");
	BiSeries s(order);
	s.add_term(i, j, c);
	return s;
}

BiSeries BiSeries::embed(const UniSeries &a, int variable, int order)
{
	if (variable != 0 && variable != 1)
		throw std::out_of_range("BiSeries::embed: variable must be 0 or 1");
	if (order > a.order())
		throw std::domain_error("BiSeries::embed: univariate input too short for requested order");
	BiSeries s(order);
	for (int n = 0; n <= order; ++n) {
		const GradedPoly &c = a.coeff(n);
		if (!c.is_zero())
			s.terms_[variable == 0 ? Key{n, 0} : Key{0, n}] = c;
	}
	return s;
}

GradedPoly BiSeries::coeff(int i, int j) const
{
	if (i < 0 || j < 0 || i + j > order_)
		throw std::out_of_range("BiSeries::coeff: powers outside window");
	auto it = terms_.find({i, j});
	return it == terms_.end() ? GradedPoly() : it->second;
}

void BiSeries::set_coeff(int i, int j, const GradedPoly &v)
{
	if (i < 0 || j < 0 || i + j > order_)
		throw std::out_of_range("BiSeries::set_coeff: powers outside window");
	if (v.is_zero())
		terms_.erase({i, j});
	else
		terms_[{i, j}] = v;
}

void BiSeries::add_term(int i, int j, const GradedPoly &v)
{
	if (v.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace({i, j}, v);
	if (!inserted) {
		it->second += v;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

BiSeries BiSeries::truncated(int n) const
{
	if (n < 0 || n > order_)
		throw std::out_of_range("BiSeries::truncated: bad order");
	BiSeries s(n);
	for (const auto &[k, v] : terms_)
		if (k.first + k.second <= n)
			s.terms_[k] = v;
	return s;
}

BiSeries BiSeries::operator-() const
{
	BiSeries r = *this;
	for (auto &[k, v] : r.terms_)
		v = -v;
	return r;
}

BiSeries operator+(const BiSeries &a, const BiSeries &b)
{
	int n = std::min(a.order_, b.order_);
	BiSeries r = a.truncated(n);
	for (const auto &[k, v] : b.terms_)
		if (k.first + k.second <= n)
			r.add_term(k.first, k.second, v);
	return r;
}

BiSeries operator-(const BiSeries &a, const BiSeries &b)
{
	int n = std::min(a.order_, b.order_);
	BiSeries r = a.truncated(n);
	for (const auto &[k, v] : b.terms_)
		if (k.first + k.second <= n)
			r.add_term(k.first, k.second, -v);
	return r;
}

BiSeries operator*(const BiSeries &a, const BiSeries &b)
{
	int n = std::min(a.order_, b.order_);
	BiSeries r(n);
	for (const auto &[ka, va] : a.terms_) {
		int da = ka.first + ka.second;
		if (da > n)
			continue;
		for (const auto &[kb, vb] : b.terms_) {
			if (da + kb.first + kb.second > n)
				continue;
			r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
		}
	}
	return r;
}

BiSeries operator*(const GradedPoly &c, const BiSeries &a)
{
	BiSeries r(a.order_);
	if (c.is_zero())
		return r;
	for (const auto &[k, v] : a.terms_)
		r.add_term(k.first, k.second, c * v);
	return r;
}

BiSeries operator*(const Rational &c, const BiSeries &a) { return GradedPoly(c) * a; }

BiSeries BiSeries::swapped() const
{
	BiSeries r(order_);
	for (const auto &[k, v] : terms_)
		r.terms_[{k.second, k.first}] = v;
	return r;
}

BiSeries BiSeries::shifted_up(int i, int j) const
{
	if (i < 0 || j < 0)
		throw std::domain_error("BiSeries::shifted_up: negative shift");
	BiSeries r(order_ + i + j);
	for (const auto &[k, v] : terms_)
		r.terms_[{k.first + i, k.second + j}] = v;
	return r;
}

BiSeries BiSeries::reciprocal() const
{
	GradedPoly c0 = coeff(0, 0);
	if (!c0.is_constant() || c0.is_zero())
		throw std::domain_error("BiSeries::reciprocal: constant term is not invertible");
	Rational inv = Rational(1) / c0.constant_value();
	BiSeries r(order_);
	r.add_term(0, 0, GradedPoly(inv));
	// solve r*this = 1 degree by degree
	for (int s = 1; s <= order_; ++s) {
		for (int i = s; i >= 0; --i) {
			int j = s - i;
			GradedPoly acc;
			for (const auto &[k, v] : terms_) {
				if (k == Key{0, 0})
					continue;
				int ri = i - k.first, rj = j - k.second;
				if (ri < 0 || rj < 0)
					continue;
				auto it = r.terms_.find({ri, rj});
				if (it != r.terms_.end())
					acc += v * it->second;
			}
			if (!acc.is_zero())
				r.terms_[{i, j}] = (-inv) * acc;
		}
	}
	return r;
}

BiSeries BiSeries::divided_by_x_minus_y() const
{
	if (swapped() != -*this)
		throw std::domain_error("BiSeries::divided_by_x_minus_y: input is not antisymmetric");
	if (order_ == 0)
		throw std::domain_error("BiSeries::divided_by_x_minus_y: order too small");
	// a = (x-y) q  gives  a_{i,j} = q_{i-1,j} - q_{i,j-1}; per total degree s
	// of a, sweep j upward and read off q_{i-1,j}; the leftover a_{0,s} must
	// equal -q_{0,s-1} or the division is not exact.
	BiSeries q(order_ - 1);
	for (int s = 1; s <= order_; ++s) {
		for (int j = 0; j < s; ++j) {
			int i = s - j;
			GradedPoly val = coeff(i, j);
			if (j > 0) {
				auto it = q.terms_.find({i, j - 1});
				if (it != q.terms_.end())
					val += it->second;
			}
			if (!val.is_zero())
				q.terms_[{i - 1, j}] = val;
		}
		GradedPoly rem = coeff(0, s);
		auto it = q.terms_.find({0, s - 1});
		if (it != q.terms_.end())
			rem += it->second;
		if (!rem.is_zero())
			throw std::domain_error("BiSeries::divided_by_x_minus_y: nonzero remainder");
	}
	return q;
}

BiSeries BiSeries::antisym_quotient(const BiSeries &num, const BiSeries &den)
{
	int n = std::min(num.order_, den.order_);
	BiSeries nq = num.truncated(n).divided_by_x_minus_y();
	BiSeries dq = den.truncated(n).divided_by_x_minus_y();
	return nq * dq.reciprocal();
}

BiSeries BiSeries::compose_outer(const UniSeries &outer) const
{
	if (!coeff(0, 0).is_zero())
		throw std::domain_error("BiSeries::compose_outer: inner constant term must vanish");
	int n = std::min(order_, outer.order());
	BiSeries in = truncated(n);
	BiSeries r = BiSeries::constant(outer.coeff(n), n);
	for (int k = n - 1; k >= 0; --k) {
		r = r * in;
		r.add_term(0, 0, outer.coeff(k));
	}
	return r;
}

BiSeries BiSeries::substitute(const UniSeries &fx, const UniSeries &fy) const
{
	if (!fx.coeff(0).is_zero() || !fy.coeff(0).is_zero())
		throw std::domain_error("BiSeries::substitute: inner series must vanish at 0");
	int n = std::min({order_, fx.order(), fy.order()});
	BiSeries bx = BiSeries::embed(fx, 0, n);
	BiSeries by = BiSeries::embed(fy, 1, n);
	// powers of the two embedded series up to the window
	std::vector<BiSeries> px{BiSeries::constant(GradedPoly(1), n)};
	std::vector<BiSeries> py{BiSeries::constant(GradedPoly(1), n)};
	for (int k = 1; k <= n; ++k) {
		px.push_back(px.back() * bx);
		py.push_back(py.back() * by);
	}
	BiSeries r(n);
	for (const auto &[k, v] : terms_) {
		if (k.first + k.second > n)
			continue;
		r = r + v * (px[k.first] * py[k.second]);
	}
	return r;
}

UniSeries BiSeries::section_y0() const
{
	UniSeries r(order_);
	for (const auto &[k, v] : terms_)
		if (k.second == 0)
			r.set_coeff(k.first, v);
	return r;
}

std::optional<std::tuple<int, int, GradedPoly>> BiSeries::first_nonzero() const
{
	std::optional<Key> best;
	for (const auto &[k, v] : terms_) {
		if (!best) {
			best = k;
			continue;
		}
		int d = k.first + k.second, bd = best->first + best->second;
		if (d < bd || (d == bd && k.first < best->first))
			best = k;
	}
	if (!best)
		return std::nullopt;
	return std::make_tuple(best->first, best->second, terms_.at(*best));
}

std::string BiSeries::str(const std::array<std::string, 4> &names) const
{
	if (terms_.empty())
		return "0";
	// order terms by total degree, then x-power
	std::vector<std::pair<Key, const GradedPoly *>> sorted;
	for (const auto &[k, v] : terms_)
		sorted.emplace_back(k, &v);
	std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
		int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
		return da != db ? da < db : a.first < b.first;
	});
	std::string out;
	for (const auto &[k, v] : sorted) {
		if (!out.empty())
			out += "\n";
		out += "x^" + std::to_string(k.first) + "*y^" + std::to_string(k.second) + ": " +
		       v->str(names);
	}
	return out;
}

std::ostream &operator<<(std::ostream &os, const BiSeries &s) { return os << s.str(); }

} // namespace fgl
