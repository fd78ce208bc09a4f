#include "fgl/addition_law.hpp"

#include <stdexcept>

namespace fgl {

namespace {

std::string bi_detail(const BiSeries &residual, const ParamSet &ps)
{
	auto fn = residual.first_nonzero();
	if (!fn)
		return "";
	auto [i, j, poly] = *fn;
	return "first nonzero residual at x^" + std::to_string(i) + "*y^" + std::to_string(j) +
	       ": " + poly.str(ps.names);
}

VerifyReport report_from_bi(std::string name, const BiSeries &residual, const ParamSet &ps)
{
	VerifyReport r;
	r.name = std::move(name);
	r.order = residual.order();
	r.passed = residual.is_zero();
	r.detail = bi_detail(residual, ps);
	return r;
}

} // namespace

UniSeries build_log_g(const UniSeries &R) { return R.reciprocal().antiderivative(); }

UniSeries build_sn(const UniSeries &log_g) { return log_g.revert(); }

BiSeries build_g_exp(const UniSeries &log_g, const UniSeries &sn, int bi_order)
{
	BiSeries inner =
	    BiSeries::embed(log_g, 0, bi_order) + BiSeries::embed(log_g, 1, bi_order);
	return inner.compose_outer(sn);
}

AdditionLaw AdditionLaw::build(const CanonicalSeries &cs, int bi_order)
{
	if (cs.order < bi_order + 4)
		throw std::domain_error("AdditionLaw::build: need cs.order >= bi_order + 4");
	int m = bi_order + 2; // internal assembly order

	AdditionLaw law{cs.params, cs.order + 1,     bi_order,
	                build_log_g(cs.R), UniSeries(1), BiSeries(bi_order),
	                BiSeries(bi_order), BiSeries(bi_order), BiSeries(bi_order),
	                BiSeries(bi_order)};
	law.sn = build_sn(law.log_g);
	law.g_exp = build_g_exp(law.log_g, law.sn, bi_order);

	UniSeries nud = cs.nu.derivative();
	UniSeries nudd = nud.derivative();
	UniSeries Rd = cs.R.derivative();
	GradedPoly rp0 = Rd.coeff(0); // R'(0) = p1/2

	BiSeries nux = BiSeries::embed(cs.nu, 0, m);
	BiSeries nuy = BiSeries::embed(cs.nu, 1, m);
	BiSeries nudy = BiSeries::embed(nud, 1, m);
	BiSeries nuddy = BiSeries::embed(nudd, 1, m);
	BiSeries Ry = BiSeries::embed(cs.R, 1, m);
	BiSeries Rdy = BiSeries::embed(Rd, 1, m);

	BiSeries P1 = nux * Ry * nudy;
	BiSeries P2 =
	    -(nux * (nudy * (Ry * (Rdy - BiSeries::constant(rp0, m))) + (Ry * Ry) * nuddy));
	const BiSeries &P3 = P1;

	BiSeries quot = BiSeries::antisym_quotient(P2 - P2.swapped(), P3 - P3.swapped());
	BiSeries w = (P1 + P1.swapped()) +
	             Rational(1, 2) * (nux * nuy * quot); // order m-1 = bi_order+1
	law.g_thm = w.compose_outer(cs.mu).truncated(bi_order);

	law.P1 = P1.truncated(bi_order);
	law.P2 = P2.truncated(bi_order);
	law.P3 = P3.truncated(bi_order);
	return law;
}

VerifyReport check_theorem(const AdditionLaw &law)
{
	return report_from_bi("g-theorem", law.g_thm - law.g_exp, law.params);
}

VerifyReport check_log_additive_g(const AdditionLaw &law)
{
	int n = law.bi_order;
	BiSeries lhs = law.g_exp.compose_outer(law.log_g);
	BiSeries rhs = BiSeries::embed(law.log_g, 0, n) + BiSeries::embed(law.log_g, 1, n);
	return report_from_bi("log-additive-g", lhs - rhs, law.params);
}

VerifyReport check_sn_addition(const AdditionLaw &law)
{
	int n = law.bi_order;
	BiSeries u_plus_v = BiSeries::monomial(GradedPoly(1), 1, 0, n) +
	                    BiSeries::monomial(GradedPoly(1), 0, 1, n);
	BiSeries lhs = u_plus_v.compose_outer(law.sn);
	BiSeries rhs = law.g_exp.substitute(law.sn, law.sn);
	return report_from_bi("sn-addition", lhs - rhs, law.params);
}

VerifyReport check_strict_iso(const CanonicalSeries &cs, const AdditionLaw &law)
{
	BiSeries F = build_buchstaber_fgl(cs, law.bi_order);
	BiSeries lhs = F.compose_outer(cs.mu);
	BiSeries rhs = law.g_exp.substitute(cs.mu, cs.mu);
	return report_from_bi("strict-iso", lhs - rhs, cs.params);
}

VerifyReport check_fgl_laws(const CanonicalSeries &cs, const AdditionLaw &law)
{
	int n = law.bi_order;
	BiSeries F = build_buchstaber_fgl(cs, n);
	VerifyReport r;
	r.name = "fgl-laws";
	r.order = n;
	r.passed = true;

	auto expect = [&](bool ok, const std::string &what) {
		if (!ok && r.passed) {
			r.passed = false;
			r.detail = what;
		}
	};
	UniSeries x_id = UniSeries::identity(n);
	expect(F.section_y0() == x_id, "F(x,0) != x");
	expect(F.swapped() == F, "F not symmetric");
	expect(law.g_exp.section_y0() == x_id, "G(x,0) != x");
	expect(law.g_exp.swapped() == law.g_exp, "G not symmetric");
	return r;
}

BiSeries cayley_residual(const BiSeries &G, const UniSeries &R)
{
	int n = G.order();
	if (R.order() < n + 1)
		throw std::domain_error("cayley_residual: R too short");
	BiSeries Rx = BiSeries::embed(R, 0, n + 1);
	BiSeries Ry = BiSeries::embed(R, 1, n + 1);
	BiSeries skew =
	    Ry.shifted_up(1, 0).truncated(n + 1) - Rx.shifted_up(0, 1).truncated(n + 1);
	BiSeries target = BiSeries::monomial(GradedPoly(1), 2, 0, n) -
	                  BiSeries::monomial(GradedPoly(1), 0, 2, n);
	return G * skew - target;
}

VerifyReport check_euler_law(int uni_order, int bi_order)
{
	ParamSet ps = ParamSet::elliptic_sine();
	UniSeries R = quartic_series(ps, uni_order).sqrt();
	UniSeries log_g = build_log_g(R);
	UniSeries sn = build_sn(log_g);
	BiSeries G = build_g_exp(log_g, sn, bi_order);

	// (x R(y) + y R(x)) / (1 - k^2 x^2 y^2)
	int n = bi_order;
	BiSeries Rx = BiSeries::embed(R, 0, n + 1);
	BiSeries Ry = BiSeries::embed(R, 1, n + 1);
	BiSeries num =
	    Ry.shifted_up(1, 0).truncated(n) + Rx.shifted_up(0, 1).truncated(n);
	BiSeries den = BiSeries::constant(GradedPoly(1), n);
	if (n >= 4)
		den = den - BiSeries::monomial(GradedPoly::variable(0), 2, 2, n);
	BiSeries closed_form = num * den.reciprocal();

	BiSeries residual = G - closed_form;
	VerifyReport r = report_from_bi("euler", residual, ps);
	if (r.passed) {
		BiSeries cay = cayley_residual(G, R);
		if (!cay.is_zero()) {
			r.passed = false;
			r.detail = "Cayley identity: " + bi_detail(cay, ps);
		}
	}
	return r;
}

VerifyReport check_jacobi_genus(int uni_order)
{
	ParamSet ps = ParamSet::jacobi_genus();
	CanonicalSeries cs = CanonicalSeries::build(ps, uni_order);
	GradedPoly m = GradedPoly::variable(0);

	VerifyReport r;
	r.name = "jacobi";
	r.order = uni_order;
	r.passed = true;

	UniSeries a_res = cs.A - UniSeries::constant(GradedPoly(1), uni_order);
	// (1-x^2)(1-k^2 x^2) = 1 - (1+k^2) x^2 + k^2 x^4
	UniSeries target = UniSeries::constant(GradedPoly(1), uni_order);
	target.set_coeff(2, -(GradedPoly(1) + m));
	target.set_coeff(4, m);
	UniSeries b_res = cs.B * cs.B - target;
	// f'^2 - (1-f^2)(1-k^2 f^2)
	UniSeries f2 = cs.exp_f * cs.exp_f;
	UniSeries one = UniSeries::constant(GradedPoly(1), uni_order);
	UniSeries fd = cs.exp_f.derivative();
	UniSeries f_res = fd * fd - (one - f2) * (one - m * f2);

	if (!a_res.is_zero()) {
		r.passed = false;
		r.detail = "A - 1: " + (a_res.first_nonzero()
		                            ? "first nonzero at x^" +
		                                  std::to_string(a_res.first_nonzero()->first)
		                            : std::string());
	} else if (!b_res.is_zero()) {
		r.passed = false;
		r.detail = "B^2 - (1-x^2)(1-k^2 x^2) nonzero";
	} else if (!f_res.is_zero()) {
		r.passed = false;
		r.detail = "f'^2 - (1-f^2)(1-k^2 f^2) nonzero";
	}
	return r;
}

VerifyReport check_ochanine_law(int uni_order, int bi_order)
{
	ParamSet ps = ParamSet::ochanine();
	UniSeries R = quartic_series(ps, uni_order).sqrt();
	UniSeries log_g = build_log_g(R);
	UniSeries sn = build_sn(log_g);

	VerifyReport r;
	r.name = "ochanine";
	r.order = uni_order;
	r.passed = true;
	for (int n = 0; n <= sn.order(); n += 2) {
		if (!sn.coeff(n).is_zero()) {
			r.passed = false;
			r.detail = "sn has a nonzero even coefficient at x^" + std::to_string(n);
			return r;
		}
	}
	BiSeries G = build_g_exp(log_g, sn, bi_order);
	BiSeries cay = cayley_residual(G, R);
	if (!cay.is_zero()) {
		r.passed = false;
		r.detail = "Cayley identity: " + bi_detail(cay, ps);
	}
	return r;
}

} // namespace fgl
