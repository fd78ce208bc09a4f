#include "fgl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fgl {

namespace {

// Shared immutable inputs, built lazily so `--only` pays for what it uses.
class Context {
  public:
	explicit Context(const VerifyOptions &opts) : opts_(opts) {}

	const VerifyOptions &opts() const { return opts_; }

	const CanonicalSeries &canonical()
	{
		std::call_once(cs_once_, [this] {
			int n = std::max(opts_.uni_order, opts_.bi_order + 4);
			ParamSet ps = ParamSet::generic();
			cs_ = opts_.perturb_b
			          ? CanonicalSeries::build_perturbed(ps, n, opts_.perturb_b->first,
			                                             opts_.perturb_b->second)
			          : CanonicalSeries::build(ps, n);
		});
		return *cs_;
	}

	const BiSeries &buchstaber_fgl()
	{
		std::call_once(f_once_, [this] { f_ = build_buchstaber_fgl(canonical(), opts_.bi_order); });
		return *f_;
	}

	const AdditionLaw &addition_law()
	{
		std::call_once(law_once_, [this] { law_ = AdditionLaw::build(canonical(), opts_.bi_order); });
		return *law_;
	}

  private:
	VerifyOptions opts_;
	std::once_flag cs_once_, f_once_, law_once_;
	std::optional<CanonicalSeries> cs_;
	std::optional<BiSeries> f_;
	std::optional<AdditionLaw> law_;
};

using CheckFn = std::function<VerifyReport(Context &)>;

const std::map<std::string, CheckFn> &registry()
{
	static const std::map<std::string, CheckFn> checks = {
	    {"b-ode", [](Context &c) { return check_ode(c.canonical()); }},
	    {"a-lemma", [](Context &c) { return check_lemma_route(c.canonical()); }},
	    {"bridge", [](Context &c) { return check_bridge(c.canonical()); }},
	    {"xi", [](Context &c) { return check_exponent_identities(c.canonical()); }},
	    {"hoehn", [](Context &c) { return check_hoehn(c.canonical()); }},
	    {"log-additive-f",
	     [](Context &c) { return check_log_additive_f(c.canonical(), c.opts().bi_order); }},
	    {"log-additive-g", [](Context &c) { return check_log_additive_g(c.addition_law()); }},
	    {"g-theorem", [](Context &c) { return check_theorem(c.addition_law()); }},
	    {"sn-addition", [](Context &c) { return check_sn_addition(c.addition_law()); }},
	    {"strict-iso",
	     [](Context &c) { return check_strict_iso(c.canonical(), c.addition_law()); }},
	    {"fgl-laws", [](Context &c) { return check_fgl_laws(c.canonical(), c.addition_law()); }},
	    {"grading",
	     [](Context &c) {
		     return check_grading(c.canonical(), c.addition_law(), c.buchstaber_fgl());
	     }},
	    {"euler",
	     [](Context &c) {
		     return check_euler_law(c.opts().spec_bi_order + 4, c.opts().spec_bi_order);
	     }},
	    {"jacobi", [](Context &c) { return check_jacobi_genus(c.opts().uni_order); }},
	    {"ochanine",
	     [](Context &c) {
		     return check_ochanine_law(c.opts().spec_bi_order + 4, c.opts().spec_bi_order);
	     }},
	};
	return checks;
}

int worker_count(const VerifyOptions &opts, std::size_t tasks)
{
	int w = opts.workers;
	if (w <= 0) {
		if (const char *env = std::getenv("BUCHSTABER_WORKERS"))
			w = std::atoi(env);
	}
	if (w <= 0)
		w = static_cast<int>(std::thread::hardware_concurrency());
	if (w <= 0)
		w = 1;
	return std::min<int>(w, static_cast<int>(tasks));
}

} // namespace

std::vector<std::string> verify_check_names()
{
	std::vector<std::string> names;
	for (const auto &[name, fn] : registry())
		names.push_back(name);
	return names;
}

std::vector<VerifyReport> run_verify(const VerifyOptions &opts,
                                     const std::vector<std::string> &only)
{
	std::vector<std::pair<std::string, CheckFn>> selected;
	if (only.empty()) {
		for (const auto &[name, fn] : registry())
			selected.emplace_back(name, fn);
	} else {
		for (const auto &name : only) {
			auto it = registry().find(name);
			if (it == registry().end())
				throw std::invalid_argument("unknown check: " + name);
			selected.emplace_back(it->first, it->second);
		}
	}

	Context ctx(opts);
	std::vector<VerifyReport> results(selected.size());
	int workers = worker_count(opts, selected.size());
	if (workers <= 1) {
		for (std::size_t i = 0; i < selected.size(); ++i)
			results[i] = selected[i].second(ctx);
	} else {
		std::atomic<std::size_t> next{0};
		auto drain = [&] {
			for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
				results[i] = selected[i].second(ctx);
		};
		std::vector<std::future<void>> pool;
		for (int w = 0; w < workers; ++w)
			pool.push_back(std::async(std::launch::async, drain));
		for (auto &f : pool)
			f.get();
	}

	std::sort(results.begin(), results.end(),
	          [](const VerifyReport &a, const VerifyReport &b) { return a.name < b.name; });
	return results;
}

namespace {

void sweep_uni(const UniSeries &s, const std::string &label, int weight_offset,
               VerifyReport &r)
{
	// expected weight of coeff(n) is 2n + weight_offset
	for (int n = 0; n <= s.order(); ++n) {
		if (s.coeff(n).is_zero())
			continue;
		auto w = s.coeff(n).weight();
		if (!w || *w != 2 * n + weight_offset) {
			r.passed = false;
			if (r.detail.empty())
				r.detail = label + " coefficient of x^" + std::to_string(n) +
				           (w ? " has weight " + std::to_string(*w) : " is inhomogeneous");
		}
	}
}

void sweep_bi(const BiSeries &s, const std::string &label, VerifyReport &r,
              int weight_offset = 0)
{
	// expected weight of coeff(i,j) is 2(i+j-1) + offset
	for (const auto &[k, v] : s.terms()) {
		auto w = v.weight();
		if (!w || *w != 2 * (k.first + k.second - 1) + weight_offset) {
			r.passed = false;
			if (r.detail.empty())
				r.detail = label + " coefficient of x^" + std::to_string(k.first) + "*y^" +
				           std::to_string(k.second) +
				           (w ? " has weight " + std::to_string(*w) : " is inhomogeneous");
		}
	}
}

} // namespace

VerifyReport check_grading(const CanonicalSeries &cs, const AdditionLaw &law, const BiSeries &F)
{
	VerifyReport r;
	r.name = "grading";
	r.order = cs.order;
	r.passed = true;
	if (!cs.params.graded)
		throw std::domain_error("check_grading: grading suspended for these parameters");

	sweep_uni(cs.R, "R", 0, r);
	sweep_uni(cs.B, "B", 0, r);
	sweep_uni(cs.A, "A", 0, r);
	sweep_uni(cs.mu, "mu", -2, r);
	sweep_uni(cs.nu, "nu", -2, r);
	sweep_uni(cs.log_f, "log_f", -2, r);
	sweep_uni(cs.exp_f, "exp_f", -2, r);
	sweep_uni(law.log_g, "log_g", -2, r);
	sweep_uni(law.sn, "sn", -2, r);
	sweep_bi(F, "F", r);
	sweep_bi(law.g_exp, "G", r);
	sweep_bi(law.g_thm, "G-theorem", r);
	sweep_bi(law.P1, "P1", r);
	// the derivatives of R and nu inside P2 shift its grading up by one step
	sweep_bi(law.P2, "P2", r, 2);
	sweep_bi(law.P3, "P3", r);
	return r;
}

} // namespace fgl
