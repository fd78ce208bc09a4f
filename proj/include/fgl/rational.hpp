#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace fgl {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
  public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den);
	Rational(const mpz_class &num, const mpz_class &den);

	/// Parse from decimal strings (denominator must be nonzero).
	static Rational from_decimal(const std::string &num, const std::string &den);

	/// Exact value of a finite double (dyadic rational).
	static Rational from_double(double d);

	mpz_class num() const { return v_.get_num(); }
	mpz_class den() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	double to_double() const { return v_.get_d(); }

	/// "3", "-3/4", ...
	std::string str() const;

	Rational operator-() const;
	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
	mpq_class v_; // canonical at all times
};

} // namespace fgl
