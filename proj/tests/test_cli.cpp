#include "ym/cli.hpp"
#include "ym/io.hpp"

#include <doctest.h>

#include <sstream>

using ym::io::Json;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
	Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = ym::cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string data(const std::string &name)
{
	return std::string(YM_TEST_DATA) + "/" + name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("dims")
{
	auto r = run({"dims", "--n", "2", "--max-degree", "6"});
	REQUIRE(r.code == ym::cli::kExitOk);
	auto j = r.json();
	CHECK(j["command"] == "dims --n 2 --max-degree 6");
	CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
	CHECK(j["results"]["ym_dims"] == Json::array({2, 1, 0, 0, 0, 0}));
	CHECK(j["results"]["ym_total"] == 3);
	CHECK(j["results"]["rows"][2]["free_dim"] == 2);
	CHECK(j["results"]["rows"][2]["ideal_dim"] == 2);

	auto strong = run({"dims", "--n", "3", "--strong", "--max-degree", "4"}).json();
	CHECK(strong["results"]["strong"] == true);
	CHECK(strong["results"]["rows"][2]["ideal_dim"] == 6);

	auto csv = run({"--format", "csv", "dims", "--n", "3", "--max-degree", "4"});
	CHECK(csv.code == 0);
	CHECK(csv.out == "degree,free_dim,ideal_dim,ym_dim\n1,3,0,3\n2,3,0,3\n3,8,3,5\n4,18,8,10\n");
}

TEST_CASE("global options may follow the subcommand")
{
	auto r = run({"dims", "--n", "2", "--max-degree", "4", "--format", "csv"});
	CHECK(r.code == 0);
	CHECK(r.out.rfind("degree,free_dim", 0) == 0);
}

TEST_CASE("verify")
{
	auto yu = run({"verify", data("yu.json"), "--strong"});
	CHECK(yu.code == ym::cli::kExitOk);
	auto j = yu.json()["results"];
	CHECK(j["residuals_zero"] == true);
	CHECK(j["residuals"].size() == 9);
	CHECK(j["image_dim"] == 8);
	CHECK(j["surjective"] == true);

	auto remark = run({"verify", data("remark.json")});
	CHECK(remark.code == 0);
	CHECK(remark.json()["results"]["solvable"] == true);
	CHECK(remark.json()["results"]["nilpotent"] == false);

	auto ef = run({"verify", data("ef0.json")});
	CHECK(ef.code == ym::cli::kExitFailure);
	CHECK(ef.json()["results"]["residuals"][0] == Json{{"f", "-2"}});
	CHECK(ef.json()["results"]["residuals"][1] == Json{{"e", "-2"}});

	auto heis = run({"verify", data("heisenberg_custom.json")});
	CHECK(heis.code == 0);
	CHECK(heis.json()["results"]["target"] == "custom");
	CHECK(heis.json()["results"]["nilpotent"] == true);
	CHECK(heis.json()["results"]["image_dim"] == 3);

	auto witt = run({"--window", "6", "verify", data("witt_pair.json")});
	CHECK(witt.code == 0);
	CHECK(witt.json()["results"]["window"]["all_covered"] == true);
	CHECK(witt.json()["results"]["window"]["central_covered"] == true);
	CHECK(witt.json()["results"]["image_dim"].is_null());
}

TEST_CASE("input errors exit with code 2 and distinct messages")
{
	auto expect = [](const std::vector<std::string> &args, const std::string &needle) {
		auto r = run(args);
		CHECK(r.code == ym::cli::kExitInput);
		CHECK_MESSAGE(r.err.find(needle) != std::string::npos, r.err);
		CHECK(r.out.empty());
	};
	expect({"verify", data("malformed.json")}, "malformed JSON");
	expect({"verify", data("arity.json")}, "image arity mismatch");
	expect({"verify", data("unknown_target.json")}, "unknown target 'so(5)'");
	expect({"verify", data("bad_element.json")}, "unknown basis element 'E13'");
	expect({"verify", data("bad_jacobi.json")}, "Jacobi identity fails");
	expect({"verify", data("missing.json")}, "cannot read");
	expect({"realization", data("bad_matrix.json")}, "not square");
	expect({"dims", "--n", "2", "--max-degree", "13"}, "degree cap");
	expect({"--format", "csv", "verify", data("yu.json")}, "only available for dims");
	expect({"pair", "--target", "sl2", "--a", "e"}, "--a and --b are required");
	expect({"pair", "--target", "sl2", "--a", "e", "--b", "x"}, "unknown basis element 'x'");
	expect({"pair", "--target", "sl2", "--a", "(1/0)*e", "--b", "f"}, "zero denominator");

	CHECK(run({}).code == ym::cli::kExitInput);
	CHECK(run({"frobnicate"}).code == ym::cli::kExitInput);
	CHECK(run({"dims"}).code == ym::cli::kExitInput);
	CHECK(run({"case-study", "--branch", "parabolic"}).code == ym::cli::kExitInput);
	CHECK(run({"--help"}).code == ym::cli::kExitOk);
}

TEST_CASE("pair")
{
	auto sl3 = run({"pair", "--target", "sl(3)", "--a", "E12+E23", "--b", "E21+E32"});
	CHECK(sl3.code == 0);
	auto j = sl3.json()["results"];
	CHECK(j["bracket_a_b"] == Json{{"H1", "1"}, {"H2", "1"}});
	CHECK(j["image_dim"] == 3);

	auto witt = run({"pair", "--target", "witt"});
	CHECK(witt.code == 0);
	CHECK(witt.json()["results"]["bracket_a_b"] == Json{{"e_1", "5"}});
	CHECK(witt.json()["results"]["window"]["covered"].size() == 21);

	auto vir = run({"pair", "--target", "witt", "--virasoro", "--a", "e_2", "--b", "e_-2"});
	CHECK(vir.json()["results"]["bracket_a_b"] == Json{{"e_0", "-4"}, {"c", "-1/2"}});
}

TEST_CASE("realization")
{
	auto a1 = run({"realization", data("affine_a1.json")});
	CHECK(a1.code == 0);
	auto j = a1.json()["results"];
	CHECK(j["h_dim"] == 3);
	CHECK(j["bound"] == 4);
	CHECK(j["gcm"] == true);
	CHECK(j["verified"] == true);

	auto m6 = run({"realization", data("rank2_m6.json")}).json()["results"];
	CHECK(m6["rank"] == 2);
	CHECK(m6["h_dim"] == 10);
	CHECK(m6["bound"] == 8);
	CHECK(m6["gcm"] == false);
	CHECK(m6["gcm_violation"] == "off-diagonal entry a13 is positive");
}

TEST_CASE("case-study")
{
	auto r = run({"--seed", "3", "case-study", "--samples", "50"});
	CHECK(r.code == 0);
	auto j = r.json();
	CHECK(j["seed"] == 3);
	CHECK(j["results"]["mismatches"] == 0);
	CHECK(j["results"]["solvable_violations"] == 0);
	CHECK(j["results"]["remark"]["nilpotent"] == false);

	auto remark_only = run({"case-study", "--family", "remark", "--branch", "semisimple", "--samples", "5"}).json();
	CHECK(remark_only["results"]["audit"]["family_hits"].size() == 2);
}

TEST_CASE("repeated runs are byte-identical")
{
	const std::vector<std::vector<std::string>> commands{
	    {"dims", "--n", "3", "--max-degree", "5"},
	    {"--seed", "9", "case-study", "--samples", "40"},
	    {"verify", data("yu.json")},
	    {"pair", "--target", "virasoro"},
	    {"realization", data("a2.json")},
	};
	for (const auto &c : commands) {
		auto a = run(c), b = run(c);
		CHECK(a.code == b.code);
		CHECK(a.out == b.out);
	}
	// Timing goes to stderr only.
	auto timed = run({"--timing", "dims", "--n", "2", "--max-degree", "3"});
	auto plain = run({"dims", "--n", "2", "--max-degree", "3"});
	CHECK(timed.err.find("elapsed") != std::string::npos);
	CHECK(Json::parse(timed.out)["results"] == Json::parse(plain.out)["results"]);
	// The seed drives the sampled parameters.
	auto s1 = run({"--seed", "1", "case-study", "--samples", "30"}).json();
	auto s2 = run({"--seed", "2", "case-study", "--samples", "30"}).json();
	CHECK(s1["results"]["audit"] != s2["results"]["audit"]);
}

} // TEST_SUITE
