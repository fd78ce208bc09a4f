#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fgl/canonical.hpp"
#include "fgl/serialize.hpp"

using namespace fgl;

namespace {

struct CliResult {
	int exit_code;
	std::string out;
};

CliResult run_cli(const std::string &args, const std::string &env = "")
{
	std::string outfile = "cli_capture.txt";
	std::string cmd =
	    (env.empty() ? env : env + " ") + std::string(CLI_BINARY) + " " + args + " > " + outfile + " 2>&1";
	int rc = std::system(cmd.c_str());
	CliResult r;
	r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
	std::ifstream in(outfile);
	std::stringstream ss;
	ss << in.rdbuf();
	r.out = ss.str();
	std::remove(outfile.c_str());
	return r;
}

} // namespace

TEST_CASE("series command")
{
	CliResult r = run_cli("series B --order 4");
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("-1/2*p1") != std::string::npos);
	CHECK(r.out.find("-1/6*p3") != std::string::npos);

	CliResult bad = run_cli("series Zeta --order 4");
	CHECK(bad.exit_code == 2);

	CliResult usage = run_cli("series");
	CHECK(usage.exit_code == 2);

	CliResult garbage = run_cli("series B --order 4 --params 0 not-a-number 0 0");
	CHECK(garbage.exit_code == 2);
}

TEST_CASE("series json round trip")
{
	CliResult r = run_cli("series R --order 6 --format json");
	REQUIRE(r.exit_code == 0);
	UniSeries parsed = series_from_json(nlohmann::json::parse(r.out));
	CanonicalSeries cs = CanonicalSeries::build(ParamSet::generic(), 6);
	CHECK(parsed == cs.R);
}

TEST_CASE("series with the sine specialization is odd")
{
	CliResult r = run_cli("series SN --order 7 --jacobi --format json");
	REQUIRE(r.exit_code == 0);
	UniSeries sn = series_from_json(nlohmann::json::parse(r.out));
	for (int n = 0; n <= 7; n += 2)
		CHECK(sn.coeff(n).is_zero());
	CHECK(sn.coeff(1) == GradedPoly(1));
}

TEST_CASE("fgl command")
{
	CliResult f = run_cli("fgl F --order 4 --format json");
	REQUIRE(f.exit_code == 0);
	BiSeries F = biseries_from_json(nlohmann::json::parse(f.out));
	GradedPoly P1 = GradedPoly::variable(0);
	CHECK(F.coeff(1, 1) == Rational(-1, 2) * P1);
	CHECK(F.section_y0() == UniSeries::identity(4));

	CliResult g = run_cli("fgl G --order 4 --format json");
	REQUIRE(g.exit_code == 0);
	BiSeries G = biseries_from_json(nlohmann::json::parse(g.out));
	CHECK(G.coeff(1, 1) == Rational(1, 2) * P1);

	CHECK(run_cli("fgl Q --order 4").exit_code == 2);
}

TEST_CASE("verify command")
{
	CliResult list = run_cli("verify --list");
	CHECK(list.exit_code == 0);
	CHECK(list.out.find("hoehn") != std::string::npos);
	CHECK(list.out.find("g-theorem") != std::string::npos);

	CliResult one = run_cli("verify --only hoehn --order 9 --bi-order 5");
	CHECK(one.exit_code == 0);
	CHECK(one.out.find("PASS  hoehn") != std::string::npos);

	// worker cap comes from the environment as well
	CliResult capped =
	    run_cli("verify --only a-lemma --only bridge --order 8 --bi-order 4", "BUCHSTABER_WORKERS=1");
	CHECK(capped.exit_code == 0);

	CliResult unknown = run_cli("verify --only nonsense");
	CHECK(unknown.exit_code == 2);
}

TEST_CASE("verify flags an injected bug with the failing coefficient")
{
	CliResult r = run_cli("verify --inject b2-flip --only b-ode --order 8 --bi-order 4");
	CHECK(r.exit_code == 1);
	CHECK(r.out.find("FAIL  b-ode") != std::string::npos);
	CHECK(r.out.find("x^2") != std::string::npos);
}

TEST_CASE("numeric command")
{
	CliResult ok = run_cli("numeric --jacobi 0 --x 0.3 --y 0.4");
	CHECK(ok.exit_code == 0);
	CHECK(ok.out.find("residual") != std::string::npos);

	CliResult generic = run_cli("numeric --p 0.3 -0.7 0.11 0.2 --x 0.02 --y 0.02 --tol 1e-8");
	CHECK(generic.exit_code == 0);

	CliResult domain = run_cli("numeric --p 0 0 0 -1 --x 2.0 --y 0 --radius 3");
	CHECK(domain.exit_code == 3);

	CliResult usage = run_cli("numeric --x 0.1 --y 0.1");
	CHECK(usage.exit_code == 2);

	CliResult missing = run_cli("numeric --jacobi 0 --y 0.1");
	CHECK(missing.exit_code == 2);
}
