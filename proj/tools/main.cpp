// Command-line front end: emit the canonical series and the two-variable
// addition laws, run the exact verification suite, or confirm the addition
// theorem numerically by quadrature.
//
// Exit codes: 0 success, 1 identity/tolerance failure, 2 usage error,
// 3 numeric domain or convergence error.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <algorithm>
#include <map>
#include <string>

#include "fgl/quadrature.hpp"
#include "fgl/serialize.hpp"
#include "fgl/verify.hpp"

namespace {

using namespace fgl;

Rational parse_rational(const std::string &text)
{
	auto slash = text.find('/');
	if (slash == std::string::npos)
		return Rational::from_decimal(text, "1");
	return Rational::from_decimal(text.substr(0, slash), text.substr(slash + 1));
}

struct SpecializationFlags {
	bool jacobi = false;
	bool ochanine = false;
	std::vector<std::string> params; // four rationals

	ParamSet resolve() const
	{
		if (jacobi)
			return ParamSet::elliptic_sine();
		if (ochanine)
			return ParamSet::ochanine();
		if (!params.empty()) {
			std::array<Rational, 4> vals;
			for (int i = 0; i < 4; ++i)
				vals[i] = parse_rational(params[i]);
			return ParamSet::at_point(vals);
		}
		return ParamSet::generic();
	}
};

void add_specialization_flags(CLI::App *cmd, SpecializationFlags &flags)
{
	auto *j = cmd->add_flag("--jacobi", flags.jacobi,
	                        "use the elliptic-sine parameters (0,-(1+k^2),0,k^2), symbolic k^2");
	auto *o = cmd->add_flag("--ochanine", flags.ochanine,
	                        "use the parameters (0,delta,0,epsilon), symbolic");
	auto *p = cmd->add_option("--params", flags.params,
	                          "exact rational parameter point, four values like 3/4")
	              ->expected(4);
	j->excludes(o)->excludes(p);
	o->excludes(p);
}

int cmd_series(const std::string &target, int order, const std::string &format,
               const SpecializationFlags &flags)
{
	ParamSet ps = flags.resolve();
	// the bundle needs the full quartic window; narrower requests truncate
	CanonicalSeries cs = CanonicalSeries::build(ps, std::max(order, 4));
	std::map<std::string, const UniSeries *> targets = {
	    {"R", &cs.R},         {"B", &cs.B},         {"A", &cs.A},
	    {"mu", &cs.mu},       {"nu", &cs.nu},       {"logF", &cs.log_f},
	    {"expF", &cs.exp_f},
	};
	UniSeries log_g = build_log_g(cs.R).truncated(order);
	UniSeries sn = build_sn(build_log_g(cs.R)).truncated(order);
	targets["logG"] = &log_g;
	targets["SN"] = &sn;

	auto it = targets.find(target);
	if (it == targets.end()) {
		std::cerr << "unknown series target '" << target << "'\n";
		return 2;
	}
	UniSeries out = it->second->truncated(order);
	if (format == "json")
		std::cout << series_to_json(out).dump(2) << "\n";
	else
		std::cout << out.str(ps.names) << "\n";
	return 0;
}

int cmd_fgl(const std::string &target, int order, const std::string &format,
            const SpecializationFlags &flags)
{
	ParamSet ps = flags.resolve();
	CanonicalSeries cs = CanonicalSeries::build(ps, std::max(order + 4, 8));
	BiSeries out(order);
	if (target == "F") {
		out = build_buchstaber_fgl(cs, order);
	} else if (target == "G") {
		UniSeries log_g = build_log_g(cs.R);
		out = build_g_exp(log_g, build_sn(log_g), order);
	} else if (target == "G-theorem") {
		out = AdditionLaw::build(cs, order).g_thm;
	} else {
		std::cerr << "unknown fgl target '" << target << "'\n";
		return 2;
	}
	if (format == "json")
		std::cout << biseries_to_json(out).dump(2) << "\n";
	else
		std::cout << out.str(ps.names) << "\n";
	return 0;
}

int cmd_verify(const VerifyOptions &opts, const std::vector<std::string> &only, bool list)
{
	if (list) {
		for (const auto &name : verify_check_names())
			std::cout << name << "\n";
		return 0;
	}
	std::vector<VerifyReport> reports = run_verify(opts, only);
	bool all_ok = true;
	for (const auto &r : reports) {
		std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (order " << r.order
		          << ")";
		if (!r.passed) {
			std::cout << "  " << r.detail;
			all_ok = false;
		}
		std::cout << "\n";
	}
	return all_ok ? 0 : 1;
}

int cmd_numeric(const std::vector<double> &pvals, bool have_jacobi, double jacobi_k, double x,
                double y, double tol, int order, double radius)
{
	ParamPoint p;
	if (have_jacobi) {
		p = {0.0, -(1.0 + jacobi_k * jacobi_k), 0.0, jacobi_k * jacobi_k};
	} else if (pvals.size() == 4) {
		p = {pvals[0], pvals[1], pvals[2], pvals[3]};
	} else {
		std::cerr << "numeric: provide --p with four values or --jacobi k\n";
		return 2;
	}
	AdditionCheck res = addition_check(p, x, y, tol, order, radius);
	std::cout << std::setprecision(15);
	std::cout << "I(x)      = " << res.integral_x << "\n";
	std::cout << "I(y)      = " << res.integral_y << "\n";
	std::cout << "G(x,y)    = " << res.g_value << "\n";
	std::cout << "I(G(x,y)) = " << res.integral_g << "\n";
	std::cout << "residual  = " << res.residual << (res.passed ? "  (<= tol)" : "  (> tol)")
	          << "\n";
	return res.passed ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact engine for the quartic elliptic-integral addition law"};
	app.require_subcommand(1);

	// series
	std::string series_target, series_format = "text";
	int series_order = 12;
	SpecializationFlags series_flags;
	auto *series = app.add_subcommand("series", "print one canonical series");
	series->add_option("target", series_target, "R B A mu nu logF expF logG SN")->required();
	series->add_option("--order", series_order, "truncation order")->check(CLI::Range(1, 64));
	series->add_option("--format", series_format)->check(CLI::IsMember({"text", "json"}));
	add_specialization_flags(series, series_flags);

	// fgl
	std::string fgl_target, fgl_format = "text";
	int fgl_order = 10;
	SpecializationFlags fgl_flags;
	auto *fgl = app.add_subcommand("fgl", "print a two-variable law");
	fgl->add_option("target", fgl_target, "F G G-theorem")->required();
	fgl->add_option("--order", fgl_order, "total-degree order")->check(CLI::Range(2, 32));
	fgl->add_option("--format", fgl_format)->check(CLI::IsMember({"text", "json"}));
	add_specialization_flags(fgl, fgl_flags);

	// verify
	VerifyOptions vopts;
	std::vector<std::string> only;
	bool list = false;
	std::string inject;
	auto *verify = app.add_subcommand("verify", "run the exact identity suite");
	verify->add_option("--order", vopts.uni_order, "univariate bundle order")
	    ->check(CLI::Range(6, 64));
	verify->add_option("--bi-order", vopts.bi_order, "bivariate total-degree order")
	    ->check(CLI::Range(4, 24));
	verify->add_option("--only", only, "run only the named checks");
	verify->add_flag("--list", list, "list check names and exit");
	verify->add_option("--workers", vopts.workers, "parallel worker cap");
	verify->add_option("--inject", inject, "negative control: 'b2-flip' corrupts B")
	    ->check(CLI::IsMember({"b2-flip"}));

	// numeric
	std::vector<double> pvals;
	double nx = 0, ny = 0, ntol = 1e-9, njacobi = 0, nradius = 0.05;
	int norder = 16;
	bool have_jacobi = false;
	auto *numeric = app.add_subcommand("numeric", "quadrature check of the addition theorem");
	numeric->add_option("--p", pvals, "parameter point p1 p2 p3 p4")->expected(4);
	auto *jopt = numeric->add_option("--jacobi", njacobi, "modulus k for (0,-(1+k^2),0,k^2)");
	numeric->add_option("--x", nx)->required();
	numeric->add_option("--y", ny)->required();
	numeric->add_option("--tol", ntol)->check(CLI::Range(1e-13, 1.0));
	numeric->add_option("--order", norder, "series order")->check(CLI::Range(4, 32));
	numeric->add_option("--radius", nradius, "series radius guard");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}

	try {
		if (series->parsed())
			return cmd_series(series_target, series_order, series_format, series_flags);
		if (fgl->parsed())
			return cmd_fgl(fgl_target, fgl_order, fgl_format, fgl_flags);
		if (verify->parsed()) {
			if (inject == "b2-flip") {
				// replace b2 by -b2: add p2/2 - p1^2/8
				GradedPoly delta = Rational(1, 2) * GradedPoly::variable(1) -
				                   Rational(1, 8) * (GradedPoly::variable(0) *
				                                     GradedPoly::variable(0));
				vopts.perturb_b = {2, delta};
			}
			return cmd_verify(vopts, only, list);
		}
		if (numeric->parsed()) {
			have_jacobi = jopt->count() > 0;
			return cmd_numeric(pvals, have_jacobi, njacobi, nx, ny, ntol, norder, nradius);
		}
	} catch (const fgl::NumericError &e) {
		std::cerr << "numeric error: " << e.what() << "\n";
		return 3;
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
