#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fgl/graded_poly.hpp"

namespace fgl {

/// Truncated power series in one variable with GradedPoly coefficients.
///
/// Every series carries its truncation order N explicitly: coefficients of
/// x^0..x^N are stored and meaningful, everything above is unknown. Binary
/// operations truncate to the minimum of the input orders; derivative lowers
/// the order by one, antiderivative and monomial shifts raise it. Nothing
/// ever pretends to know more coefficients than the inputs justify.
class UniSeries {
  public:
	explicit UniSeries(int order);
	UniSeries(std::vector<GradedPoly> coeffs); // order = coeffs.size()-1

	static UniSeries zero(int order) { return UniSeries(order); }
	static UniSeries constant(const GradedPoly &c, int order);
	/// The series "x".
	static UniSeries identity(int order);
	static UniSeries monomial(const GradedPoly &c, int power, int order);

	int order() const { return static_cast<int>(c_.size()) - 1; }
	const GradedPoly &coeff(int n) const;
	void set_coeff(int n, const GradedPoly &v);

	bool is_zero() const;
	/// Index of the lowest nonzero coefficient; order()+1 when zero.
	int valuation() const;

	UniSeries truncated(int n) const;

	UniSeries operator-() const;
	friend UniSeries operator+(const UniSeries &a, const UniSeries &b);
	friend UniSeries operator-(const UniSeries &a, const UniSeries &b);
	friend UniSeries operator*(const UniSeries &a, const UniSeries &b);
	friend UniSeries operator*(const GradedPoly &c, const UniSeries &a);
	friend UniSeries operator*(const Rational &c, const UniSeries &a);

	/// Termwise derivative, order N-1.
	UniSeries derivative() const;
	/// Termwise antiderivative with zero constant term, order N+1.
	UniSeries antiderivative() const;

	/// Multiply by x^k (exact reindexing, order N+k).
	UniSeries shifted_up(int k) const;
	/// Divide by x^k; the k lowest coefficients must vanish. Order N-k.
	UniSeries shifted_down(int k) const;

	/// Multiplicative inverse; requires an invertible (constant rational)
	/// constant term.
	UniSeries reciprocal() const;

	/// Square root with constant term 1; requires constant term 1.
	UniSeries sqrt() const;

	/// this(inner), inner(0) = 0. Result order min(orders).
	UniSeries compose(const UniSeries &inner) const;

	/// Compositional inverse of a series x + c2 x^2 + ...; solved coefficient
	/// by coefficient (each new one enters the composition linearly).
	UniSeries revert() const;

	/// Exact quotient num/den through the representable order
	/// min(orders) - valuation(den). Throws if the division leaves a
	/// remainder or the leading coefficient of den is not invertible.
	static UniSeries div_exact(const UniSeries &num, const UniSeries &den);

	/// Lowest nonzero coefficient as (power, value), for residual reports.
	std::optional<std::pair<int, GradedPoly>> first_nonzero() const;

	friend bool operator==(const UniSeries &a, const UniSeries &b) { return a.c_ == b.c_; }
	friend bool operator!=(const UniSeries &a, const UniSeries &b) { return !(a == b); }

	std::string str(const std::array<std::string, 4> &names = {"p1", "p2", "p3", "p4"},
	                const std::string &var = "x") const;
	friend std::ostream &operator<<(std::ostream &os, const UniSeries &s);

  private:
	std::vector<GradedPoly> c_; // c_[n] is the coefficient of x^n
};

} // namespace fgl
