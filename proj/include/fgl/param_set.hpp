#pragma once

#include <array>
#include <string>

#include "fgl/uni_series.hpp"

namespace fgl {

/// Values assigned to the four coefficients of the quartic
/// 1 + p1 x + p2 x^2 + p3 x^3 + p4 x^4, as elements of the working ring.
/// The generic set uses the four graded generators themselves; the named
/// specializations re-read the ring generators as auxiliary variables
/// (k^2, or delta/epsilon), for which the weighted grading is suspended.
struct ParamSet {
	std::array<GradedPoly, 4> p;
	bool graded = true;
	std::array<std::string, 4> names{"p1", "p2", "p3", "p4"};
	std::string label = "generic";

	static ParamSet generic();

	/// Elliptic-sine parameters (0, -(1+k^2), 0, k^2); slot 0 reads as k^2.
	static ParamSet elliptic_sine();

	/// Parameters (0, 2(1+k^2), 0, (1-k^2)^2) that make the ODE solution
	/// equal sqrt((1-x^2)(1-k^2 x^2)); slot 0 reads as k^2.
	static ParamSet jacobi_genus();

	/// Parameters (0, delta, 0, epsilon); slots 0 and 1 read as delta, epsilon.
	static ParamSet ochanine();

	/// Exact rational parameter point (grading suspended).
	static ParamSet at_point(const std::array<Rational, 4> &values);
};

/// The quartic 1 + p1 x + ... + p4 x^4 as a series at the given order.
UniSeries quartic_series(const ParamSet &ps, int order);

} // namespace fgl
