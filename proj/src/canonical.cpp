#include "fgl/canonical.hpp"

#include <stdexcept>

namespace fgl {

namespace {

// coefficients of B - x B'
UniSeries euler_complement(const UniSeries &B)
{
	UniSeries r(B.order());
	for (int n = 0; n <= B.order(); ++n)
		r.set_coeff(n, Rational(1 - n) * B.coeff(n));
	return r;
}

// B^4 + p1 x B^3 + p2 x^2 B^2 + p3 x^3 B + p4 x^4, truncated to B's order
UniSeries ode_rhs(const ParamSet &ps, const UniSeries &B)
{
	int n = B.order();
	UniSeries B2 = B * B;
	UniSeries B3 = B2 * B;
	UniSeries rhs = B3 * B;
	if (n >= 1)
		rhs = rhs + (ps.p[0] * B3.truncated(n - 1)).shifted_up(1);
	if (n >= 2)
		rhs = rhs + (ps.p[1] * B2.truncated(n - 2)).shifted_up(2);
	if (n >= 3)
		rhs = rhs + (ps.p[2] * B.truncated(n - 3)).shifted_up(3);
	if (n >= 4)
		rhs = rhs + UniSeries::monomial(ps.p[3], 4, n);
	return rhs;
}

// B^2 (B - x B')^2 - rhs
UniSeries ode_residual(const ParamSet &ps, const UniSeries &B)
{
	UniSeries ec = euler_complement(B);
	return (B * B) * (ec * ec) - ode_rhs(ps, B);
}

std::string uni_detail(const UniSeries &residual, const ParamSet &ps)
{
	auto fn = residual.first_nonzero();
	if (!fn)
		return "";
	return "first nonzero residual at x^" + std::to_string(fn->first) + ": " +
	       fn->second.str(ps.names);
}

std::string bi_detail(const BiSeries &residual, const ParamSet &ps)
{
	auto fn = residual.first_nonzero();
	if (!fn)
		return "";
	auto [i, j, poly] = *fn;
	return "first nonzero residual at x^" + std::to_string(i) + "*y^" + std::to_string(j) +
	       ": " + poly.str(ps.names);
}

VerifyReport report_from_uni(std::string name, const UniSeries &residual, const ParamSet &ps)
{
	VerifyReport r;
	r.name = std::move(name);
	r.order = residual.order();
	r.passed = residual.is_zero();
	r.detail = uni_detail(residual, ps);
	return r;
}

} // namespace

UniSeries solve_quartic_ode(const ParamSet &ps, int order)
{
	if (order < 1)
		throw std::domain_error("solve_quartic_ode: order must be >= 1");
	UniSeries B = UniSeries::constant(GradedPoly(1), order);
	for (int m = 1; m <= order; ++m) {
		// with b_m still zero, the residual coefficient at x^m equals
		// (its value) - 2m b_m once b_m is switched on, so
		GradedPoly res_m = ode_residual(ps, B.truncated(m)).coeff(m);
		B.set_coeff(m, Rational(1, 2 * m) * res_m);
	}
	return B;
}

namespace {

CanonicalSeries assemble(const ParamSet &ps, int order, UniSeries B)
{
	if (order < 4)
		throw std::domain_error("CanonicalSeries: order must be >= 4");
	CanonicalSeries cs{ps,
	                   order,
	                   quartic_series(ps, order),
	                   UniSeries(order),
	                   std::move(B),
	                   UniSeries(order),
	                   UniSeries(order),
	                   UniSeries(order),
	                   UniSeries(order),
	                   UniSeries(order),
	                   UniSeries(order)};
	cs.R = cs.quartic.sqrt();

	const UniSeries &Bs = cs.B;
	GradedPoly b2_const =
	    Rational(1, 16) * (ps.p[0] * ps.p[0]) - Rational(1, 4) * ps.p[1];
	cs.A = Bs * Bs - Rational(1, 2) * (Bs * Bs.derivative()).shifted_up(1) +
	       (Rational(1, 4) * ps.p[0]) * Bs.truncated(order - 1).shifted_up(1) -
	       UniSeries::monomial(b2_const, 2, order);

	// alternative route: -x^2 B beta - b1 x B + B^2 - b2 x^2 with
	// beta = (B' - b1)/(2x)
	GradedPoly b1 = Bs.coeff(1);
	GradedPoly b2 = Bs.coeff(2);
	UniSeries beta = Rational(1, 2) * (Bs.derivative() - UniSeries::constant(b1, order - 1))
	                     .shifted_down(1);
	cs.A_lemma = -(Bs * beta).shifted_up(2) -
	             b1 * Bs.truncated(order - 1).shifted_up(1) + Bs * Bs -
	             UniSeries::monomial(b2, 2, order);

	cs.mu = Bs.reciprocal().truncated(order - 1).shifted_up(1);
	cs.nu = cs.mu.revert();

	UniSeries lf = Bs.reciprocal().antiderivative(); // order + 1
	cs.log_f = lf.truncated(order);
	cs.exp_f = lf.revert().truncated(order);
	return cs;
}

} // namespace

CanonicalSeries CanonicalSeries::build(const ParamSet &ps, int order)
{
	return assemble(ps, order, solve_quartic_ode(ps, order));
}

CanonicalSeries CanonicalSeries::build_perturbed(const ParamSet &ps, int order, int power,
                                                 const GradedPoly &delta)
{
	UniSeries B = solve_quartic_ode(ps, order);
	B.set_coeff(power, B.coeff(power) + delta);
	return assemble(ps, order, std::move(B));
}

BiSeries build_buchstaber_fgl(const CanonicalSeries &cs, int bi_order)
{
	if (cs.order < bi_order + 1)
		throw std::domain_error("build_buchstaber_fgl: need cs.order >= bi_order + 1");
	int n = bi_order + 1;
	BiSeries Ax = BiSeries::embed(cs.A, 0, n);
	BiSeries Ay = BiSeries::embed(cs.A, 1, n);
	BiSeries Bx = BiSeries::embed(cs.B, 0, n);
	BiSeries By = BiSeries::embed(cs.B, 1, n);
	BiSeries num = Ay.shifted_up(2, 0).truncated(n) - Ax.shifted_up(0, 2).truncated(n);
	BiSeries den = By.shifted_up(1, 0).truncated(n) - Bx.shifted_up(0, 1).truncated(n);
	return BiSeries::antisym_quotient(num, den);
}

VerifyReport check_ode(const CanonicalSeries &cs)
{
	return report_from_uni("b-ode", ode_residual(cs.params, cs.B), cs.params);
}

VerifyReport check_lemma_route(const CanonicalSeries &cs)
{
	return report_from_uni("a-lemma", cs.A - cs.A_lemma, cs.params);
}

VerifyReport check_bridge(const CanonicalSeries &cs)
{
	UniSeries lhs = cs.B.compose(cs.nu);
	UniSeries rhs = cs.R * cs.nu.derivative();
	return report_from_uni("bridge", lhs - rhs, cs.params);
}

VerifyReport check_exponent_identities(const CanonicalSeries &cs)
{
	const UniSeries &f = cs.exp_f;
	UniSeries fd = f.derivative();
	UniSeries xi2 = cs.B.compose(f) - fd;

	UniSeries fdd = fd.derivative();
	GradedPoly c2 = fdd.coeff(0);                 // f''(0)
	GradedPoly c3 = Rational(6) * f.coeff(3);     // f'''(0)
	UniSeries rhs = fd * fd -
	                Rational(1, 2) * ((fdd + c2 * fd) * f) +
	                (Rational(1, 2) * (c2 * c2 - c3)) * (f * f);
	UniSeries xi1 = cs.A.compose(f) - rhs;

	VerifyReport r;
	r.name = "xi";
	r.order = xi1.order();
	r.passed = xi1.is_zero() && xi2.is_zero();
	if (!xi2.is_zero())
		r.detail = "B(f) - f': " + uni_detail(xi2, cs.params);
	else if (!xi1.is_zero())
		r.detail = "A(f) identity: " + uni_detail(xi1, cs.params);
	return r;
}

VerifyReport check_hoehn(const CanonicalSeries &cs)
{
	const ParamSet &ps = cs.params;
	UniSeries q = UniSeries::div_exact(cs.exp_f.derivative(), cs.exp_f.shifted_down(1));
	int n = q.order();
	UniSeries lhs_root = q.derivative().shifted_up(1) - q; // x q' - q
	UniSeries lhs = lhs_root * lhs_root;
	UniSeries q2 = q * q;
	UniSeries q3 = q2 * q;
	UniSeries rhs = q3 * q;
	rhs = rhs + (ps.p[0] * q3.truncated(n - 1)).shifted_up(1);
	rhs = rhs + (ps.p[1] * q2.truncated(n - 2)).shifted_up(2);
	rhs = rhs + (ps.p[2] * q.truncated(n - 3)).shifted_up(3);
	rhs = rhs + UniSeries::monomial(ps.p[3], 4, n);
	return report_from_uni("hoehn", lhs - rhs, ps);
}

VerifyReport check_log_additive_f(const CanonicalSeries &cs, int bi_order)
{
	BiSeries F = build_buchstaber_fgl(cs, bi_order);
	BiSeries lhs = F.compose_outer(cs.log_f);
	BiSeries rhs = BiSeries::embed(cs.log_f, 0, bi_order) + BiSeries::embed(cs.log_f, 1, bi_order);
	BiSeries residual = lhs - rhs;
	VerifyReport r;
	r.name = "log-additive-f";
	r.order = residual.order();
	r.passed = residual.is_zero();
	r.detail = bi_detail(residual, cs.params);
	return r;
}

} // namespace fgl
