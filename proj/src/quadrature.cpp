#include "fgl/quadrature.hpp"

#include <cmath>

#include "fgl/addition_law.hpp"

namespace fgl {

namespace {

constexpr double kDomainFloor = 1e-9;
constexpr long kEvalBudget = 400000;

// Gauss 7 / Kronrod 15 abscissae and weights on [-1,1] (QUADPACK dqk15).
constexpr double kXgk[8] = {.991455371120812639206854697526329,
                            .949107912342758524526189684047851,
                            .864864423359769072789712788640926,
                            .741531185599394439863864773280788,
                            .586087235467691130294144838258730,
                            .405845151377397166906606412076961,
                            .207784955007898467600689403773245,
                            0.};
constexpr double kWgk[8] = {.022935322010529224963732008058970,
                            .063092092629978553290700663189204,
                            .104790010322250183839876322541518,
                            .140653259715525918745189590510238,
                            .169004726639267902826583426598550,
                            .190350578064785409913256402421014,
                            .204432940075298892414161999234649,
                            .209482141084727828012999174891714};
constexpr double kWg[4] = {.129484966168869693270611432679082,
                           .279705391489276667901467771423780,
                           .381830050505118944950369775488975,
                           .417959183673469387755102040816327};

struct PanelResult {
	double k15;
	double err;
};

double integrand(const ParamPoint &p, double t)
{
	double q = p.quartic(t);
	if (q < kDomainFloor)
		throw NumericError(NumericError::Kind::domain,
		                   "quartic under the square root fell below the domain floor at t=" +
		                       std::to_string(t));
	return 1.0 / std::sqrt(q);
}

PanelResult gk15(const ParamPoint &p, double a, double b, long &evaluations)
{
	double c = 0.5 * (a + b);
	double h = 0.5 * (b - a);
	double fc = integrand(p, c);
	evaluations += 15;
	double resg = fc * kWg[3];
	double resk = fc * kWgk[7];
	for (int j = 0; j < 7; ++j) {
		double dx = h * kXgk[j];
		double fsum = integrand(p, c - dx) + integrand(p, c + dx);
		resk += kWgk[j] * fsum;
		if (j % 2 == 1)
			resg += kWg[j / 2] * fsum;
	}
	resk *= h;
	resg *= h;
	double d = std::fabs(resk - resg);
	// standard rescaling of the rule-pair difference
	double err = 200.0 * d;
	err *= std::sqrt(err);
	err = std::max(std::min(err, d), 1e-18 * std::fabs(resk));
	return {resk, err};
}

} // namespace

QuadResult gk15_panel(const ParamPoint &p, double a, double b)
{
	QuadResult out;
	PanelResult r = gk15(p, a, b, out.evaluations);
	out.value = r.k15;
	out.est_error = r.err;
	return out;
}

QuadResult elliptic_integral(const ParamPoint &p, double x, double tol)
{
	if (tol < 1e-13)
		throw std::invalid_argument("elliptic_integral: tol must be >= 1e-13");
	QuadResult out;
	if (x == 0.0)
		return out;

	double total = std::fabs(x);
	std::vector<std::pair<double, double>> stack{{0.0, x}};
	while (!stack.empty()) {
		auto [a, b] = stack.back();
		stack.pop_back();
		PanelResult r = gk15(p, a, b, out.evaluations);
		if (out.evaluations > kEvalBudget)
			throw NumericError(NumericError::Kind::budget,
			                   "quadrature did not converge within the evaluation budget");
		double share = std::fabs(b - a) / total;
		if (r.err <= tol * share || std::fabs(b - a) < 1e-14 * total) {
			out.value += r.k15;
			out.est_error += r.err;
		} else {
			double mid = 0.5 * (a + b);
			stack.push_back({a, mid});
			stack.push_back({mid, b});
		}
	}
	return out;
}

ParamSet ParamPoint::exact() const
{
	return ParamSet::at_point({Rational::from_double(p1), Rational::from_double(p2),
	                           Rational::from_double(p3), Rational::from_double(p4)});
}

SeriesEvaluator::SeriesEvaluator(const ParamPoint &p, int order) : order_(order)
{
	if (order < 2)
		throw std::invalid_argument("SeriesEvaluator: order must be >= 2");
	ParamSet ps = p.exact();
	UniSeries R = quartic_series(ps, order).sqrt();
	UniSeries log_g = build_log_g(R); // order+1
	UniSeries sn = build_sn(log_g);
	BiSeries G = build_g_exp(log_g, sn, order);

	sn_.resize(order + 2);
	for (int n = 0; n <= order + 1; ++n)
		sn_[n] = sn.coeff(n).constant_value().to_double();

	g_.assign(order + 1, {});
	for (int i = 0; i <= order; ++i)
		g_[i].assign(order - i + 1, 0.0);
	for (const auto &[k, v] : G.terms())
		g_[k.first][k.second] = v.constant_value().to_double();
}

double SeriesEvaluator::g(double x, double y, double radius) const
{
	if (std::fabs(x) > radius || std::fabs(y) > radius)
		throw NumericError(NumericError::Kind::radius,
		                   "series evaluation outside the radius guard");
	double acc = 0.0;
	for (int i = order_; i >= 0; --i) {
		double row = 0.0;
		for (int j = order_ - i; j >= 0; --j)
			row = row * y + g_[i][j];
		acc = acc * x + row;
	}
	return acc;
}

double SeriesEvaluator::sn(double u) const
{
	double acc = 0.0;
	for (int n = static_cast<int>(sn_.size()) - 1; n >= 0; --n)
		acc = acc * u + sn_[n];
	return acc;
}

std::optional<double> euler_modulus_squared(const ParamPoint &p)
{
	if (p.p1 == 0.0 && p.p3 == 0.0 && p.p4 >= 0.0 &&
	    std::fabs(p.p2 + 1.0 + p.p4) < 1e-15)
		return p.p4;
	return std::nullopt;
}

double euler_closed_form(double m, double x, double y)
{
	double qx = (1.0 - x * x) * (1.0 - m * x * x);
	double qy = (1.0 - y * y) * (1.0 - m * y * y);
	double den = 1.0 - m * x * x * y * y;
	if (qx < 0.0 || qy < 0.0 || std::fabs(den) < kDomainFloor)
		throw NumericError(NumericError::Kind::domain,
		                   "closed-form law evaluated outside its real domain");
	return (x * std::sqrt(qy) + y * std::sqrt(qx)) / den;
}

AdditionCheck addition_check(const ParamPoint &p, double x, double y, double tol, int order,
                             double radius)
{
	if (tol < 1e-13)
		throw std::invalid_argument("addition_check: tol must be >= 1e-13");
	double qtol = std::max(tol / 20.0, 1e-13);

	AdditionCheck out;
	out.tol = tol;
	if (std::fabs(x) <= radius && std::fabs(y) <= radius) {
		SeriesEvaluator series(p, order);
		out.g_value = series.g(x, y, radius);
	} else if (auto m = euler_modulus_squared(p)) {
		out.g_value = euler_closed_form(*m, x, y);
	} else {
		throw NumericError(NumericError::Kind::radius,
		                   "arguments exceed the series radius guard and the point has no "
		                   "closed-form law");
	}
	QuadResult ix = elliptic_integral(p, x, qtol);
	QuadResult iy = elliptic_integral(p, y, qtol);
	QuadResult ig = elliptic_integral(p, out.g_value, qtol);
	out.integral_x = ix.value;
	out.integral_y = iy.value;
	out.integral_g = ig.value;
	out.evaluations = ix.evaluations + iy.evaluations + ig.evaluations;
	out.residual = std::fabs(ix.value + iy.value - ig.value);
	out.passed = out.residual <= tol;
	return out;
}

double sn_reference(double k, double u, double tol)
{
	if (k < 0.0 || k >= 1.0)
		throw std::invalid_argument("sn_reference: need 0 <= k < 1");
	if (u == 0.0)
		return 0.0;
	ParamPoint p{0.0, -(1.0 + k * k), 0.0, k * k};
	double sign = u < 0 ? -1.0 : 1.0;
	double target = std::fabs(u);

	// 1/sqrt(quartic) >= 1 near 0, so the root lies in [0, target].
	double hi = std::min(target, 1.0 - 1e-9);
	double qtol = std::max(tol / 10.0, 1e-13);
	if (elliptic_integral(p, hi, qtol).value < target)
		throw NumericError(NumericError::Kind::bracket,
		                   "sn_reference: argument outside the invertible range");
	double lo = 0.0;
	for (int it = 0; it < 200 && hi - lo > tol * 0.25; ++it) {
		double mid = 0.5 * (lo + hi);
		(elliptic_integral(p, mid, qtol).value < target ? lo : hi) = mid;
	}
	return sign * 0.5 * (lo + hi);
}

} // namespace fgl
