#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fgl/addition_law.hpp"

namespace fgl {

struct VerifyOptions {
	int uni_order = 12;     // univariate bundle order
	int bi_order = 10;      // total-degree order for the bivariate laws
	int spec_bi_order = 8;  // bivariate order for the specialized laws
	/// Negative-control hook: add delta*x^power to B before anything else.
	std::optional<std::pair<int, GradedPoly>> perturb_b;
	/// Worker cap; 0 means read BUCHSTABER_WORKERS / hardware default.
	int workers = 0;
};

/// Names of all registered exact checks, sorted.
std::vector<std::string> verify_check_names();

/// Run the selected checks (all when `only` is empty). Results are sorted by
/// name. Unknown names throw std::invalid_argument.
std::vector<VerifyReport> run_verify(const VerifyOptions &opts,
                                     const std::vector<std::string> &only = {});

/// Weighted-homogeneity sweep over every series of the generic bundles:
/// coefficient of x^n has weight 2n in R, B, A and 2(n-1) in mu, nu, log, exp;
/// coefficient of x^i y^j in the bivariate laws has weight 2(i+j-1).
VerifyReport check_grading(const CanonicalSeries &cs, const AdditionLaw &law,
                           const BiSeries &F);

} // namespace fgl
