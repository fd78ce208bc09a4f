#include "fgl/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fgl {

Rational::Rational(long num, long den) : v_(num, den)
{
	if (den == 0)
		throw std::domain_error("Rational: zero denominator");
	v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : v_(num, den)
{
	if (den == 0)
		throw std::domain_error("Rational: zero denominator");
	v_.canonicalize();
}

Rational Rational::from_decimal(const std::string &num, const std::string &den)
{
	return Rational(mpz_class(num, 10), mpz_class(den, 10));
}

Rational Rational::from_double(double d)
{
	Rational r;
	r.v_ = mpq_class(d);
	return r;
}

std::string Rational::str() const
{
	if (is_integer())
		return v_.get_num().get_str();
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const
{
	Rational r;
	r.v_ = -v_;
	return r;
}

Rational &Rational::operator+=(const Rational &o)
{
	v_ += o.v_;
	return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
	v_ -= o.v_;
	return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
	v_ *= o.v_;
	return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("Rational: division by zero");
	v_ /= o.v_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace fgl
