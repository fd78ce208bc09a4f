#pragma once

#include <string>

namespace fgl {

/// Outcome of one exact identity check.
struct VerifyReport {
	std::string name;
	int order = 0; // order through which the residual was verified
	bool passed = false;
	std::string detail; // first failing coefficient when !passed
};

} // namespace fgl
