#include "ym/cli.hpp"

#include "ym/io.hpp"
#include "ym/sl2_case.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace ym::cli {

namespace {

using io::InputError;
using io::Json;

struct GlobalOptions {
	std::string format = "json";
	std::uint64_t seed = 0;
	int max_degree = 6;
	int depth = 8;
	long window = 10;
	bool timing = false;
};

std::string fnv1a64(const std::string &data)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : data) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	std::ostringstream os;
	os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
	return os.str();
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError(InputError::Kind::Usage, "cannot read '" + path + "'");
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

class Reporter {
public:
	Reporter(const std::vector<std::string> &args, std::ostream &out) : out_(out)
	{
		for (const auto &a : args) {
			if (!command_.empty())
				command_ += " ";
			command_ += a;
		}
		digest_input_ = command_;
	}

	void add_input(const std::string &contents) { digest_input_ += "\n" + contents; }

	void emit(Json results, std::optional<std::uint64_t> seed = std::nullopt)
	{
		Json report;
		report["command"] = command_;
		if (seed)
			report["seed"] = *seed;
		report["inputs_digest"] = fnv1a64(digest_input_);
		report["results"] = std::move(results);
		out_ << report.dump(2) << "\n";
	}

private:
	std::ostream &out_;
	std::string command_;
	std::string digest_input_;
};

template <class Elements>
Json elements_json(const Elements &elems)
{
	Json out = Json::array();
	for (const auto &e : elems)
		out.push_back(io::to_json(e));
	return out;
}

Json window_json(const WindowReport &w)
{
	Json out;
	out["depth"] = w.depth;
	out["window"] = w.window;
	out["virasoro"] = w.virasoro;
	out["covered"] = w.covered;
	out["all_covered"] = w.covers_window();
	out["central_covered"] = w.central_covered;
	out["span_dim"] = w.span_dim;
	out["note"] = "finite evidence on |n| <= window at the stated depth, not a proof of generation";
	return out;
}

Json morphism_report_json(const MorphismReport &r)
{
	Json out;
	out["residuals_zero"] = r.residuals_zero;
	out["residuals"] = elements_json(r.residuals);
	out["image_dim"] = r.image_dim;
	out["solvable"] = r.solvable;
	out["nilpotent"] = r.nilpotent;
	out["surjective"] = r.surjective;
	return out;
}

Json witt_report_json(const GeneratorMorphism<WittTarget> &phi, bool strong, const std::vector<WittElement> &gens,
                      const GlobalOptions &g)
{
	auto residuals = relation_residuals(phi, strong);
	Json out;
	out["residuals_zero"] = all_zero(residuals);
	out["residuals"] = elements_json(residuals);
	out["image_dim"] = nullptr;
	out["solvable"] = nullptr;
	out["nilpotent"] = nullptr;
	out["surjective"] = nullptr;
	out["window"] = window_json(generated_window(gens, g.depth, g.window, phi.target().virasoro));
	return out;
}

Json params_json(const Sl2CaseParameters &p)
{
	auto pair = [](const Pair &v) { return Json::array({v[0].to_string(), v[1].to_string()}); };
	Json out;
	out["branch"] = to_string(p.branch);
	out["alpha"] = pair(p.alpha);
	out["beta"] = pair(p.beta);
	out["gamma"] = pair(p.gamma);
	return out;
}

// --- commands --------------------------------------------------------------

int cmd_dims(Reporter &rep, std::ostream &out, const GlobalOptions &g, int n, bool strong)
{
	if (g.max_degree < 1)
		throw InputError(InputError::Kind::Usage, "--max-degree must be >= 1");
	auto rows = dimension_table(n, g.max_degree, strong);
	if (g.format == "csv") {
		out << "degree,free_dim,ideal_dim,ym_dim\n";
		for (const auto &r : rows)
			out << r.degree << "," << r.free_dim << "," << r.ideal_dim << "," << r.ym_dim << "\n";
		return kExitOk;
	}
	Json results;
	results["n"] = n;
	results["strong"] = strong;
	results["max_degree"] = g.max_degree;
	Json table = Json::array();
	std::vector<std::uint64_t> ym_column;
	std::uint64_t total = 0;
	for (const auto &r : rows) {
		table.push_back({{"degree", r.degree}, {"free_dim", r.free_dim}, {"ideal_dim", r.ideal_dim}, {"ym_dim", r.ym_dim}});
		ym_column.push_back(r.ym_dim);
		total += r.ym_dim;
	}
	results["rows"] = std::move(table);
	results["ym_dims"] = ym_column;
	results["ym_total"] = total;
	rep.emit(std::move(results));
	return kExitOk;
}

int cmd_verify(Reporter &rep, const GlobalOptions &g, const std::string &path, bool strong)
{
	const std::string text = read_file(path);
	rep.add_input(text);
	auto spec = io::parse_morphism_spec(io::parse_json_text(text));
	Json results;
	results["n"] = spec.n;
	results["target"] = spec.target;
	results["strong"] = strong;
	bool ok = false;
	if (auto *phi = std::get_if<GeneratorMorphism<AlgebraTarget>>(&spec.morphism)) {
		auto report = analyze(*phi, strong);
		ok = report.residuals_zero;
		results.update(morphism_report_json(report));
	} else {
		const auto &witt = std::get<GeneratorMorphism<WittTarget>>(spec.morphism);
		Json w = witt_report_json(witt, strong, witt.images(), g);
		ok = w["residuals_zero"].get<bool>();
		results.update(w);
	}
	rep.emit(std::move(results));
	return ok ? kExitOk : kExitFailure;
}

int cmd_case_study(Reporter &rep, const GlobalOptions &g, const std::string &branch, std::size_t samples,
                   const std::string &family)
{
	std::vector<Sl2Branch> branches;
	if (branch == "nilpotent" || branch == "both")
		branches.push_back(Sl2Branch::Nilpotent);
	if (branch == "semisimple" || branch == "both")
		branches.push_back(Sl2Branch::Semisimple);

	Json results;
	results["branch"] = branch;
	results["samples"] = samples;
	results["family"] = family;

	std::size_t mismatches = 0;
	Json equivalence = Json::array();
	for (auto b : branches) {
		auto eq = sl2_oracle_equivalence(b, samples, g.seed);
		mismatches += eq.mismatches;
		Json e;
		e["branch"] = to_string(b);
		e["samples"] = eq.samples;
		e["both_zero"] = eq.both_zero;
		e["both_nonzero"] = eq.both_nonzero;
		e["mismatches"] = eq.mismatches;
		Json examples = Json::array();
		for (const auto &p : eq.mismatch_examples)
			examples.push_back(params_json(p));
		e["mismatch_examples"] = std::move(examples);
		equivalence.push_back(std::move(e));
	}
	results["equivalence"] = std::move(equivalence);
	results["mismatches"] = mismatches;

	AuditOptions options;
	options.nilpotent_branch = branch != "semisimple";
	options.semisimple_branch = branch != "nilpotent";
	options.random_candidates = family == "all" || family == "random";
	options.targeted_families = family == "all" || family == "targeted";
	auto audit = solvable_image_audit(samples, g.seed, options);
	Json a;
	a["candidates"] = audit.candidates;
	a["residual_zero"] = audit.residual_zero;
	a["excluded"] = audit.excluded;
	a["solvable_violations"] = audit.solvable_violations;
	a["family_hits"] = audit.family_hits;
	Json counterexamples = Json::array();
	for (const auto &c : audit.counterexamples)
		counterexamples.push_back({{"family", c.family}, {"images", elements_json(c.images)}});
	a["counterexamples"] = std::move(counterexamples);
	results["audit"] = std::move(a);
	results["solvable_violations"] = audit.solvable_violations;

	Json remark = morphism_report_json(audit.remark);
	remark["images"] = elements_json(remark_morphism().images());
	results["remark"] = std::move(remark);

	rep.emit(std::move(results), g.seed);
	return mismatches == 0 && audit.solvable_violations == 0 ? kExitOk : kExitFailure;
}

int cmd_pair(Reporter &rep, const GlobalOptions &g, const std::string &target_text, const std::string &a_text,
             const std::string &b_text, bool virasoro_flag)
{
	io::AnyTarget target = io::parse_target(Json(target_text));
	Json results;
	results["target"] = target_text;
	FreeLieElement x1x2 = bracket(FreeLieElement::generator(4, 1), FreeLieElement::generator(4, 2));
	if (auto *witt = std::get_if<WittTarget>(&target)) {
		witt->virasoro = witt->virasoro || virasoro_flag;
		auto phi = witt_virasoro_morphism(witt->virasoro);
		if (!a_text.empty() || !b_text.empty()) {
			WittElement a = io::parse_witt_element(a_text.empty() ? "e_-2" : a_text);
			WittElement b = io::parse_witt_element(b_text.empty() ? "e_3" : b_text);
			phi = GeneratorMorphism<WittTarget>(*witt, {a, b, Scalar::i() * a, Scalar::i() * b});
		}
		results["virasoro"] = witt->virasoro;
		results["a"] = io::to_json(phi.images()[0]);
		results["b"] = io::to_json(phi.images()[1]);
		results["bracket_a_b"] = io::to_json(evaluate(phi, x1x2));
		Json report = witt_report_json(phi, false, {phi.images()[0], phi.images()[1]}, g);
		const bool ok = report["residuals_zero"].get<bool>();
		results.update(report);
		rep.emit(std::move(results));
		return ok ? kExitOk : kExitFailure;
	}
	const auto &alg = std::get<AlgebraTarget>(target);
	if (a_text.empty() || b_text.empty())
		throw InputError(InputError::Kind::Usage, "--a and --b are required for a finite-dimensional target");
	if (virasoro_flag)
		throw InputError(InputError::Kind::Usage, "--virasoro only applies to the witt target");
	TargetElement a = io::parse_element(alg.algebra, a_text);
	TargetElement b = io::parse_element(alg.algebra, b_text);
	auto phi = pair_to_ym4_morphism(alg.algebra, a, b);
	auto report = analyze(phi);
	results["a"] = io::to_json(a);
	results["b"] = io::to_json(b);
	results["bracket_a_b"] = io::to_json(evaluate(phi, x1x2));
	results.update(morphism_report_json(report));
	rep.emit(std::move(results));
	return report.residuals_zero ? kExitOk : kExitFailure;
}

int cmd_realization(Reporter &rep, const std::string &path)
{
	const std::string text = read_file(path);
	rep.add_input(text);
	MatrixData a = io::parse_matrix(io::parse_json_text(text));
	auto gcm = is_generalized_cartan(a);
	auto realization = build_realization(a);
	const bool verified = verify_realization(realization, a);
	Json results;
	results["m"] = a.size();
	results["rank"] = a.rank();
	results["gcm"] = gcm.ok;
	if (!gcm.ok)
		results["gcm_violation"] = gcm.reason;
	results["h_dim"] = realization.h_dim;
	results["pi"] = io::to_json(realization.pi);
	results["pi_check"] = io::to_json(realization.pi_check);
	results["pairing"] = io::to_json(pairing(realization));
	results["verified"] = verified;
	results["bound"] = ym_quotient_bound(a);
	rep.emit(std::move(results));
	return verified ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations with Yang-Mills Lie algebras ym(n)", "ymalg"};
	app.require_subcommand(1);
	GlobalOptions g;
	app.add_option("--format", g.format, "Output format (csv only for dims)")->check(CLI::IsMember({"json", "csv"}));
	app.add_option("--seed", g.seed, "Master seed for sampling");
	app.add_option("--max-degree", g.max_degree, "Largest degree for dimension tables");
	app.add_option("--depth", g.depth, "Bracket depth for Witt/Virasoro window evidence")->check(CLI::PositiveNumber);
	app.add_option("--window", g.window, "Index window |n| <= N for Witt/Virasoro evidence")->check(CLI::PositiveNumber);
	app.add_flag("--timing", g.timing, "Print elapsed time to stderr");

	int n = 0;
	bool strong = false;
	auto *dims = app.add_subcommand("dims", "Degreewise dimensions of f(n), the relator ideal, and ym(n)");
	dims->add_option("--n", n, "Generator count")->required()->check(CLI::PositiveNumber);
	dims->add_flag("--strong", strong, "Use the n^2 relators [x_i,[x_i,x_j]]");

	std::string spec_path;
	auto *verify = app.add_subcommand("verify", "Check a generator morphism against the Yang-Mills relators");
	verify->add_option("spec", spec_path, "Morphism spec JSON")->required();
	verify->add_flag("--strong", strong, "Use the n^2 relators [x_i,[x_i,x_j]]");

	std::string branch = "both", family = "all";
	std::size_t samples = 100;
	auto *case_study = app.add_subcommand("case-study", "Morphisms ym(3) -> sl(2): oracle equivalence and image audit");
	case_study->add_option("--branch", branch, "nilpotent, semisimple or both")
	    ->check(CLI::IsMember({"nilpotent", "semisimple", "both"}));
	case_study->add_option("--samples", samples, "Samples per branch")->check(CLI::PositiveNumber);
	case_study->add_option("--family", family, "Audit candidates: all, random, targeted or remark")
	    ->check(CLI::IsMember({"all", "random", "targeted", "remark"}));

	std::string target, a_text, b_text;
	bool virasoro = false;
	auto *pair = app.add_subcommand("pair", "Morphism ym(4) -> g from a pair (a, b) via (a, b, ia, ib)");
	pair->add_option("--target", target, "sl2, sl(m), heisenberg, witt or virasoro")->required();
	pair->add_option("--a", a_text, "First element, e.g. e, E12+E23, e_-2");
	pair->add_option("--b", b_text, "Second element");
	pair->add_flag("--virasoro", virasoro, "Track the Virasoro cocycle");

	std::string matrix_path;
	auto *realization = app.add_subcommand("realization", "Realization of a matrix and the ym(n) bound");
	realization->add_option("matrix", matrix_path, "Matrix JSON")->required();

	for (auto *sub : {dims, verify, case_study, pair, realization})
		sub->fallthrough();

	std::vector<const char *> argv{"ymalg"};
	for (const auto &a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError &e) {
		return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
	}

	const auto start = std::chrono::steady_clock::now();
	int code = kExitOk;
	try {
		if (g.format == "csv" && !dims->parsed())
			throw InputError(InputError::Kind::Usage, "--format csv is only available for dims");
		Reporter rep(args, out);
		if (dims->parsed())
			code = cmd_dims(rep, out, g, n, strong);
		else if (verify->parsed())
			code = cmd_verify(rep, g, spec_path, strong);
		else if (case_study->parsed())
			code = cmd_case_study(rep, g, branch, samples, family);
		else if (pair->parsed())
			code = cmd_pair(rep, g, target, a_text, b_text, virasoro);
		else
			code = cmd_realization(rep, matrix_path);
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return kExitInput;
	} catch (const DegreeCapExceeded &e) {
		err << "error: " << e.what() << "\n";
		return kExitInput;
	} catch (const std::invalid_argument &e) {
		err << "error: " << e.what() << "\n";
		return kExitInput;
	}
	if (g.timing)
		err << "elapsed: "
		    << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
	return code;
}

} // namespace ym::cli
