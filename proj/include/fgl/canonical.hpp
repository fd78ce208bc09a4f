#pragma once

#include "fgl/bi_series.hpp"
#include "fgl/param_set.hpp"
#include "fgl/verify_report.hpp"

namespace fgl {

/// The canonical series attached to the quartic 1 + p1 x + ... + p4 x^4,
/// all truncated at one common order N:
///
///   R      sqrt of the quartic
///   B      the solution with B(0)=1 of  B^2 (B - x B')^2 =
///          B^4 + p1 x B^3 + p2 x^2 B^2 + p3 x^3 B + p4 x^4
///   A      B^2 - (1/2) x B B' + (1/4) p1 x B - (p1^2/16 - p2/4) x^2
///   mu     x / B,   nu = compositional inverse of mu
///   log_f  integral from 0 of 1/B,   exp_f = compositional inverse
///
/// A_lemma is the same series assembled through the alternative route
///   -x^2 B beta - b1 x B + B^2 - b2 x^2,  beta = (B' - b1)/(2x),
/// kept separately so the two constructions can be compared.
struct CanonicalSeries {
	ParamSet params;
	int order = 0;
	UniSeries quartic, R, B, A, A_lemma, mu, nu, log_f, exp_f;

	static CanonicalSeries build(const ParamSet &ps, int order);

	/// Same pipeline, but with delta * x^power added to B right after the
	/// ODE recursion; everything downstream is rebuilt from the corrupted B.
	/// Negative-control tool.
	static CanonicalSeries build_perturbed(const ParamSet &ps, int order, int power,
	                                       const GradedPoly &delta);
};

/// The ODE solution alone (order-by-order coefficient matching).
UniSeries solve_quartic_ode(const ParamSet &ps, int order);

/// The rational-form group law  (x^2 A(y) - y^2 A(x)) / (x B(y) - y B(x))
/// through total degree bi_order. Needs cs.order >= bi_order + 1.
BiSeries build_buchstaber_fgl(const CanonicalSeries &cs, int bi_order);

/// Residual of the defining ODE for B; verified through cs.order.
VerifyReport check_ode(const CanonicalSeries &cs);

/// A equals the alternative assembly exactly.
VerifyReport check_lemma_route(const CanonicalSeries &cs);

/// B(nu(x)) = R(x) nu'(x); verified through cs.order - 1.
VerifyReport check_bridge(const CanonicalSeries &cs);

/// The two exponent identities: B(f) = f' and
/// A(f) = f'^2 - (1/2)(f'' + f''(0) f') f + (1/2)(f''(0)^2 - f'''(0)) f^2;
/// verified through cs.order - 2.
VerifyReport check_exponent_identities(const CanonicalSeries &cs);

/// Pole-free form of the quartic differential condition on f'/f: with
/// q = x f'/f,  (x q' - q)^2 = q^4 + p1 x q^3 + p2 x^2 q^2 + p3 x^3 q + p4 x^4;
/// verified through cs.order - 1.
VerifyReport check_hoehn(const CanonicalSeries &cs);

/// log_f(F(x,y)) = log_f(x) + log_f(y) through total degree bi_order.
VerifyReport check_log_additive_f(const CanonicalSeries &cs, int bi_order);

} // namespace fgl
