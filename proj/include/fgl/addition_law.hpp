#pragma once

#include "fgl/canonical.hpp"

namespace fgl {

/// The addition law G of the integral with differential 1/R:
///
///   log_g  integral from 0 of 1/R,   sn = compositional inverse of log_g
///   g_exp  sn(log_g(x) + log_g(y))
///   g_thm  mu( P1 + sP1 + (1/2) nu(x) nu(y) (P2 - sP2)/(P3 - sP3) )
///
/// with s the swap of x and y and
///
///   P1 = nu(x) R(y) nu'(y)
///   P2 = -nu(x) ( nu'(y) R(y) (R'(y) - R'(0)) + R(y)^2 nu''(y) )
///   P3 = nu(x) R(y) nu'(y)
///
/// P1 and P3 coincide term by term; both are kept and compared rather than
/// merged. All bivariate members share the order bi_order; the assembly
/// happens two orders higher internally so the division by (x - y) and the
/// second derivative of nu lose nothing.
struct AdditionLaw {
	ParamSet params;
	int uni_order = 0;
	int bi_order = 0;
	UniSeries log_g, sn;
	BiSeries g_exp, g_thm, P1, P2, P3;

	/// Needs cs.order >= bi_order + 4.
	static AdditionLaw build(const CanonicalSeries &cs, int bi_order);
};

UniSeries build_log_g(const UniSeries &R);            // order R.order()+1
UniSeries build_sn(const UniSeries &log_g);           // same order as log_g
BiSeries build_g_exp(const UniSeries &log_g, const UniSeries &sn, int bi_order);

/// g_thm equals g_exp exactly.
VerifyReport check_theorem(const AdditionLaw &law);

/// log_g(G(x,y)) = log_g(x) + log_g(y).
VerifyReport check_log_additive_g(const AdditionLaw &law);

/// sn(u + v) = G(sn(u), sn(v)) in two formal variables.
VerifyReport check_sn_addition(const AdditionLaw &law);

/// mu(F(x,y)) = G(mu(x), mu(y)): mu is a strict isomorphism between the two
/// laws. Needs cs.order >= law.bi_order + 1.
VerifyReport check_strict_iso(const CanonicalSeries &cs, const AdditionLaw &law);

/// F(x,0) = x, F symmetric, G(x,0) = x, G symmetric.
VerifyReport check_fgl_laws(const CanonicalSeries &cs, const AdditionLaw &law);

/// At parameters (0, -(1+k^2), 0, k^2), symbolic k^2: G equals the expansion
/// of (x R(y) + y R(x)) / (1 - k^2 x^2 y^2), and the Cayley identity
/// G(x,y) (x R(y) - y R(x)) = x^2 - y^2 holds.
VerifyReport check_euler_law(int uni_order, int bi_order);

/// At parameters (0, 2(1+k^2), 0, (1-k^2)^2), symbolic k^2: A = 1,
/// B^2 = (1-x^2)(1-k^2 x^2), and f' ^2 = (1-f^2)(1-k^2 f^2) for f = exp_f.
VerifyReport check_jacobi_genus(int uni_order);

/// At parameters (0, delta, 0, epsilon), symbolic: sn is odd and the Cayley
/// identity holds.
VerifyReport check_ochanine_law(int uni_order, int bi_order);

/// Cayley residual G (x R(y) - y R(x)) - (x^2 - y^2); needs R.order() >= G.order()+1.
BiSeries cayley_residual(const BiSeries &G, const UniSeries &R);

} // namespace fgl
