#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>

#include "fgl/uni_series.hpp"

namespace fgl {

/// Truncated power series in two variables, total-degree window: terms
/// x^i y^j with i+j <= N are stored (sparsely), everything above is unknown.
/// The same explicit-order discipline as UniSeries applies.
class BiSeries {
  public:
	using Key = std::pair<int, int>;
	using TermMap = std::map<Key, GradedPoly>;

	explicit BiSeries(int order);

	static BiSeries zero(int order) { return BiSeries(order); }
	static BiSeries constant(const GradedPoly &c, int order);
	static BiSeries monomial(const GradedPoly &c, int i, int j, int order);
	/// Embed a univariate series as a series in x (variable 0) or y (1).
	static BiSeries embed(const UniSeries &a, int variable, int order);

	int order() const { return order_; }
	GradedPoly coeff(int i, int j) const;
	void set_coeff(int i, int j, const GradedPoly &v);
	const TermMap &terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }

	BiSeries truncated(int n) const;

	BiSeries operator-() const;
	friend BiSeries operator+(const BiSeries &a, const BiSeries &b);
	friend BiSeries operator-(const BiSeries &a, const BiSeries &b);
	friend BiSeries operator*(const BiSeries &a, const BiSeries &b);
	friend BiSeries operator*(const GradedPoly &c, const BiSeries &a);
	friend BiSeries operator*(const Rational &c, const BiSeries &a);

	/// Exchange the two variables.
	BiSeries swapped() const;

	/// Multiply by x^i y^j (exact reindexing, order N+i+j).
	BiSeries shifted_up(int i, int j) const;

	/// Multiplicative inverse; constant term must be an invertible rational.
	BiSeries reciprocal() const;

	/// Exact division by (x - y); input must be antisymmetric. Order N-1.
	/// Throws when the synthetic division leaves a remainder.
	BiSeries divided_by_x_minus_y() const;

	/// The quotient num/den for antisymmetric num and den = (x-y)*u with
	/// invertible u: both sides are divided by (x-y) exactly, then the
	/// unit part is inverted. Order min(orders)-1.
	static BiSeries antisym_quotient(const BiSeries &num, const BiSeries &den);

	/// outer(this), constant term of this must vanish. Order min(orders).
	BiSeries compose_outer(const UniSeries &outer) const;

	/// Substitute fx(x) for x and fy(y) for y; both must vanish at 0.
	BiSeries substitute(const UniSeries &fx, const UniSeries &fy) const;

	/// Row j=0 as a univariate series (the section y = 0).
	UniSeries section_y0() const;

	/// Lexicographically (total degree, then x-power) first nonzero term.
	std::optional<std::tuple<int, int, GradedPoly>> first_nonzero() const;

	friend bool operator==(const BiSeries &a, const BiSeries &b)
	{
		return a.order_ == b.order_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const BiSeries &a, const BiSeries &b) { return !(a == b); }

	std::string str(const std::array<std::string, 4> &names = {"p1", "p2", "p3", "p4"}) const;
	friend std::ostream &operator<<(std::ostream &os, const BiSeries &s);

  private:
	void add_term(int i, int j, const GradedPoly &v);

	int order_;
	TermMap terms_; // only nonzero coefficients, all with i+j <= order_
};

} // namespace fgl
