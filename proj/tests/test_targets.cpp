#include "oracles.hpp"

#include "ym/targets.hpp"

#include <doctest.h>

#include <random>

using namespace ym;

namespace {

TargetElement b(const AlgebraPtr &g, const std::string &label, Scalar c = 1)
{
	return TargetElement::basis(g, label, c);
}

// Matrix of a basis label of sl(m): Eij or Hi.
oracle::Matrix label_matrix(int m, const std::string &label)
{
	if (label[0] == 'E')
		return oracle::matrix_unit(m, label[1] - '0', label[2] - '0');
	const int i = label[1] - '0';
	return oracle::matsum(oracle::matrix_unit(m, i, i), oracle::matrix_unit(m, i + 1, i + 1), -1);
}

oracle::Matrix to_matrix(int m, const TargetElement &x)
{
	oracle::Matrix out(m, std::vector<Scalar>(m));
	const auto &labels = x.algebra()->labels();
	for (const auto &[k, c] : x.coords())
		out = oracle::matsum(out, label_matrix(m, m == 2 ? std::vector<std::string>{"E12", "H1", "E21"}[k] : labels[k]), c);
	return out;
}

TargetElement random_element(std::mt19937_64 &rng, const AlgebraPtr &g)
{
	SparseVector v;
	for (std::size_t k = 0; k < g->dim(); ++k) {
		Scalar c = oracle::small_scalar(rng, 2);
		if (!c.is_zero())
			v.emplace(k, c);
	}
	return TargetElement(g, v);
}

} // namespace

TEST_SUITE("targets") {

TEST_CASE("sl(2) brackets")
{
	auto g = sl_algebra(2);
	CHECK(g->labels() == std::vector<std::string>{"e", "h", "f"});
	CHECK(bracket_in(*g, b(g, "e"), b(g, "f")) == b(g, "h"));
	CHECK(bracket_in(*g, b(g, "h"), b(g, "e")) == b(g, "e", 2));
	CHECK(bracket_in(*g, b(g, "h"), b(g, "f")) == b(g, "f", -2));
	CHECK(b(g, "E12") == b(g, "e"));
	CHECK(b(g, "H1") == b(g, "h"));
	CHECK(b(g, "E21") == b(g, "f"));
	CHECK_THROWS_AS(b(g, "E13"), std::invalid_argument);
}

TEST_CASE("sl(3) brackets")
{
	auto g = sl_algebra(3);
	CHECK(g->dim() == 8);
	CHECK(g->labels() == std::vector<std::string>{"E12", "E13", "E23", "H1", "H2", "E21", "E31", "E32"});
	CHECK(bracket_in(*g, b(g, "E23"), b(g, "E31")) == b(g, "E21"));
	CHECK(bracket_in(*g, b(g, "E12"), b(g, "E13")).is_zero());
	CHECK(bracket_in(*g, b(g, "E12"), b(g, "E23")) == b(g, "E13"));
	CHECK(bracket_in(*g, b(g, "E12"), b(g, "E21")) == b(g, "H1"));
	CHECK(bracket_in(*g, b(g, "E13"), b(g, "E31")) == b(g, "H1") + b(g, "H2"));
	CHECK(bracket_in(*g, b(g, "H2"), b(g, "E12")) == b(g, "E12", -1));
}

TEST_CASE("sl(m) structure constants agree with matrix commutators")
{
	std::mt19937_64 rng(8);
	for (int m = 2; m <= 4; ++m) {
		auto g = sl_algebra(m);
		CHECK(g->dim() == static_cast<std::size_t>(m * m - 1));
		for (int k = 0; k < 40; ++k) {
			auto u = random_element(rng, g), v = random_element(rng, g);
			CHECK(to_matrix(m, bracket_in(*g, u, v)) == oracle::matcomm(to_matrix(m, u), to_matrix(m, v)));
		}
	}
}

TEST_CASE("antisymmetry and Jacobi in targets")
{
	std::mt19937_64 rng(9);
	for (const auto &g : {sl_algebra(2), sl_algebra(3), heisenberg()})
		for (int k = 0; k < 40; ++k) {
			auto u = random_element(rng, g), v = random_element(rng, g), w = random_element(rng, g);
			CHECK((bracket_in(*g, u, v) + bracket_in(*g, v, u)).is_zero());
			CHECK((bracket_in(*g, u, bracket_in(*g, v, w)) + bracket_in(*g, v, bracket_in(*g, w, u)) +
			       bracket_in(*g, w, bracket_in(*g, u, v)))
			          .is_zero());
		}
}

TEST_CASE("construction rejects bad structure constants")
{
	using Bracket = StructureConstantAlgebra::Bracket;
	// [a,b] = a, [a,c] = b, [b,c] = 0: Jacobi fails on (a, b, c).
	CHECK_THROWS_AS(StructureConstantAlgebra({"a", "b", "c"},
	                                         std::vector<Bracket>{{0, 1, {{0, 1}}}, {0, 2, {{1, 1}}}}),
	                std::invalid_argument);
	// [a,a] must vanish.
	CHECK_THROWS_AS(StructureConstantAlgebra({"a"}, std::vector<Bracket>{{0, 0, {{0, 1}}}}), std::invalid_argument);
	// Contradictory entries for [a,b] and [b,a].
	CHECK_THROWS_AS(StructureConstantAlgebra({"a", "b"}, std::vector<Bracket>{{0, 1, {{0, 1}}}, {1, 0, {{0, 1}}}}),
	                std::invalid_argument);
	CHECK_THROWS_AS(StructureConstantAlgebra({"a", "a"}, {}), std::invalid_argument);
	CHECK_THROWS_AS(sl_algebra(1), std::invalid_argument);
	// The 2-dimensional nonabelian algebra is fine.
	CHECK_NOTHROW(StructureConstantAlgebra({"a", "b"}, std::vector<Bracket>{{0, 1, {{1, 1}}}}));
}

TEST_CASE("subalgebra closure")
{
	auto g3 = sl_algebra(3);
	CHECK(subalgebra_closure(*g3, {b(g3, "E12"), b(g3, "E23"), b(g3, "E31")}).dim() == 8);
	CHECK(subalgebra_closure(*g3, {b(g3, "E12"), b(g3, "E23")}).dim() == 3);
	CHECK(subalgebra_closure(*g3, {b(g3, "E12") + b(g3, "E23"), b(g3, "E21") + b(g3, "E32")}).dim() == 3);
	CHECK(subalgebra_closure(*g3, {b(g3, "E12"), b(g3, "E21")}).dim() == 3);

	auto g2 = sl_algebra(2);
	CHECK(subalgebra_closure(*g2, {b(g2, "e"), b(g2, "f")}).dim() == 3);
	CHECK(subalgebra_closure(*g2, {b(g2, "h"), b(g2, "e")}).dim() == 2);
	CHECK(subalgebra_closure(*g2, {b(g2, "h"), b(g2, "h", Scalar::i())}).dim() == 1);
	auto h = heisenberg();
	CHECK(subalgebra_closure(*h, {b(h, "p")}).dim() == 1);
}

TEST_CASE("closure dimension agrees with the matrix oracle")
{
	std::mt19937_64 rng(10);
	for (int m = 2; m <= 3; ++m) {
		auto g = sl_algebra(m);
		for (int k = 0; k < 25; ++k) {
			std::vector<TargetElement> gens;
			std::vector<oracle::Matrix> mats;
			std::uniform_int_distribution<int> count(1, 3), pick(0, static_cast<int>(g->dim()) - 1);
			for (int t = count(rng); t > 0; --t) {
				// Sparse generators reach proper subalgebras more often.
				auto x = b(g, g->labels()[pick(rng)], oracle::small_scalar(rng) + Scalar(4));
				if (k % 2)
					x = x + b(g, g->labels()[pick(rng)]);
				gens.push_back(x);
				mats.push_back(to_matrix(m, x));
			}
			auto span = subalgebra_closure(*g, gens);
			CHECK(span.dim() == oracle::matrix_closure_dim(mats));
			CHECK(is_bracket_closed(*g, span));
		}
	}
}

TEST_CASE("derived and lower central series")
{
	auto g2 = sl_algebra(2);
	auto borel = series_analysis(*g2, subalgebra_closure(*g2, {b(g2, "h"), b(g2, "e")}));
	CHECK(borel.derived_dims() == std::vector<std::size_t>{2, 1, 0});
	CHECK(borel.lower_central_dims() == std::vector<std::size_t>{2, 1});
	CHECK(borel.is_solvable);
	CHECK_FALSE(borel.is_nilpotent);

	auto whole = series_analysis(*g2, subalgebra_closure(*g2, {b(g2, "e"), b(g2, "f")}));
	CHECK(whole.derived_dims() == std::vector<std::size_t>{3});
	CHECK_FALSE(whole.is_solvable);
	CHECK_FALSE(whole.is_nilpotent);

	auto h = heisenberg();
	auto heis = series_analysis(*h, subalgebra_closure(*h, {b(h, "p"), b(h, "q")}));
	CHECK(heis.derived_dims() == std::vector<std::size_t>{3, 1, 0});
	CHECK(heis.lower_central_dims() == std::vector<std::size_t>{3, 1, 0});
	CHECK(heis.is_nilpotent);

	auto g3 = sl_algebra(3);
	auto upper = series_analysis(*g3, subalgebra_closure(*g3, {b(g3, "E12"), b(g3, "E23")}));
	CHECK(upper.lower_central_dims() == std::vector<std::size_t>{3, 1, 0});
	CHECK(upper.is_nilpotent);

	auto zero = series_analysis(*g3, Subspace(8));
	CHECK(zero.is_solvable);
	CHECK(zero.is_nilpotent);

	Subspace not_closed(3);
	not_closed.insert({{0, Scalar(1)}});
	not_closed.insert({{2, Scalar(1)}});
	CHECK_FALSE(is_bracket_closed(*g2, not_closed));
	CHECK_THROWS_AS(series_analysis(*g2, not_closed), std::invalid_argument);
}

TEST_CASE("element formatting")
{
	auto g = sl_algebra(2);
	CHECK((b(g, "e", 2) - b(g, "h")).to_string() == "2*e - h");
	CHECK(TargetElement(g, {}).to_string() == "0");
	CHECK(b(g, "f").coefficient("f") == Scalar(1));
	CHECK(b(g, "f").coefficient("e").is_zero());
}

} // TEST_SUITE
