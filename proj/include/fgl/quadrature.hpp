#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fgl/param_set.hpp"

namespace fgl {

/// Numeric parameter assignment for the quartic under the square root.
struct ParamPoint {
	double p1 = 0, p2 = 0, p3 = 0, p4 = 0;

	double quartic(double t) const
	{
		return 1.0 + t * (p1 + t * (p2 + t * (p3 + t * p4)));
	}
	ParamSet exact() const; // dyadic-rational specialization
};

struct QuadResult {
	double value = 0;
	double est_error = 0;
	long evaluations = 0;
};

class NumericError : public std::runtime_error {
  public:
	enum class Kind { domain, budget, radius, bracket };
	NumericError(Kind k, const std::string &msg) : std::runtime_error(msg), kind(k) {}
	Kind kind;
};

/// One Gauss 7 / Kronrod 15 panel on [a, b]: the fixed-order rule behind
/// the adaptive integrator, exposed for convergence tests.
QuadResult gk15_panel(const ParamPoint &p, double a, double b);

/// Adaptive integral of 1/sqrt(quartic) from 0 to x: interval halving with a
/// Gauss 7 / Kronrod 15 pair per panel, error from the rule difference.
/// Throws NumericError on a domain-floor violation (quartic < 1e-9 at any
/// node) or when the evaluation budget runs out.
QuadResult elliptic_integral(const ParamPoint &p, double x, double tol);

/// Series of the addition law and of the inverse integral, built exactly at
/// one parameter point and frozen as double coefficients.
class SeriesEvaluator {
  public:
	SeriesEvaluator(const ParamPoint &p, int order = 16);

	int order() const { return order_; }

	/// Horner evaluation of the addition-law series. Throws NumericError
	/// when |x| or |y| exceeds the radius guard.
	double g(double x, double y, double radius = 0.05) const;

	/// Horner evaluation of the inverse-integral series.
	double sn(double u) const;

  private:
	int order_;
	std::vector<std::vector<double>> g_; // g_[i][j], i+j <= order_
	std::vector<double> sn_;
};

struct AdditionCheck {
	double integral_x = 0, integral_y = 0;
	double g_value = 0, integral_g = 0;
	double residual = 0;
	double tol = 0;
	bool passed = false;
	long evaluations = 0;
};

/// k^2 when the point has the Euler shape (0, -(1+k^2), 0, k^2).
std::optional<double> euler_modulus_squared(const ParamPoint &p);

/// (x sqrt((1-y^2)(1-m y^2)) + y sqrt((1-x^2)(1-m x^2))) / (1 - m x^2 y^2),
/// the exact law at the Euler-shaped points.
double euler_closed_form(double m, double x, double y);

/// |I(x) + I(y) - I(G(x,y))| <= tol, with the three integrals computed by
/// quadrature and G by series evaluation. Outside the series radius guard
/// the exact closed form is used when the point has the Euler shape;
/// otherwise a radius violation is raised.
AdditionCheck addition_check(const ParamPoint &p, double x, double y, double tol,
                             int order = 16, double radius = 0.05);

/// Inversion of the elliptic-sine integral at modulus k by bracketed
/// bisection on the quadrature; reference oracle for the series.
double sn_reference(double k, double u, double tol);

} // namespace fgl
