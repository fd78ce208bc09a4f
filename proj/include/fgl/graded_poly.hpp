#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "fgl/rational.hpp"

namespace fgl {

/// Exponents of the four ring generators. The generators carry weights
/// 2, 4, 6, 8, so a monomial has weighted degree 2e0 + 4e1 + 6e2 + 8e3.
struct Exponents {
	std::array<int, 4> e{0, 0, 0, 0};

	int weight() const { return 2 * e[0] + 4 * e[1] + 6 * e[2] + 8 * e[3]; }
	bool is_constant() const { return e == std::array<int, 4>{0, 0, 0, 0}; }

	friend Exponents operator+(const Exponents &a, const Exponents &b)
	{
		Exponents r;
		for (int i = 0; i < 4; ++i)
			r.e[i] = a.e[i] + b.e[i];
		return r;
	}
	auto operator<=>(const Exponents &) const = default;
};

/// Polynomial in the four generators with exact rational coefficients.
/// Canonical form: term map ordered by exponents, no zero coefficients, so
/// equality is plain term-by-term comparison.
class GradedPoly {
  public:
	using TermMap = std::map<Exponents, Rational>;

	GradedPoly() = default;
	GradedPoly(long c) : GradedPoly(Rational(c)) {}
	GradedPoly(const Rational &c);

	/// The i-th generator (0-based).
	static GradedPoly variable(int i);
	static GradedPoly term(const Exponents &e, const Rational &c);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	/// Value of a constant polynomial (zero polynomial gives 0).
	Rational constant_value() const;

	const TermMap &terms() const { return terms_; }
	Rational coeff(const Exponents &e) const;

	/// Weighted degree if homogeneous, nullopt if mixed. The zero polynomial
	/// has no weight and is rejected.
	std::optional<int> weight() const;

	GradedPoly operator-() const;
	GradedPoly &operator+=(const GradedPoly &o);
	GradedPoly &operator-=(const GradedPoly &o);
	friend GradedPoly operator+(GradedPoly a, const GradedPoly &b) { return a += b; }
	friend GradedPoly operator-(GradedPoly a, const GradedPoly &b) { return a -= b; }
	friend GradedPoly operator*(const GradedPoly &a, const GradedPoly &b);
	friend GradedPoly operator*(const Rational &c, const GradedPoly &a);

	GradedPoly pow(int n) const;

	/// Exact substitution of ring values for the four generators.
	Rational eval(const std::array<Rational, 4> &point) const;
	GradedPoly subst(const std::array<GradedPoly, 4> &point) const;

	/// Horner-style double evaluation; each exact coefficient is converted
	/// to double only at its point of use.
	double eval_double(const std::array<double, 4> &point) const;

	friend bool operator==(const GradedPoly &a, const GradedPoly &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const GradedPoly &a, const GradedPoly &b) { return !(a == b); }

	/// Render with the given generator names, e.g. "1/16*p1^2 - 1/4*p2".
	std::string str(const std::array<std::string, 4> &names = {"p1", "p2", "p3", "p4"}) const;

	friend std::ostream &operator<<(std::ostream &os, const GradedPoly &p);

  private:
	void prune();

	TermMap terms_;
};

} // namespace fgl
