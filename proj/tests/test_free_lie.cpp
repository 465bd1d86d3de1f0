#include "oracles.hpp"

#include "ym/free_lie.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

using namespace ym;

namespace {

FreeLieElement x(int n, int j)
{
	return FreeLieElement::generator(n, j);
}

} // namespace

TEST_SUITE("free_lie") {

TEST_CASE("Lyndon words")
{
	const std::vector<Letter> w112{1, 1, 2}, w121{1, 2, 1}, w11{1, 1}, w1{1}, w12{1, 2}, w1213{1, 2, 1, 3};
	CHECK(is_lyndon(w112));
	CHECK_FALSE(is_lyndon(w121));
	CHECK_FALSE(is_lyndon(w11));
	CHECK(is_lyndon(w1));
	CHECK(is_lyndon(w12));
	CHECK(is_lyndon(w1213));
	CHECK_THROWS_AS(LyndonWord({2, 1}), std::invalid_argument);
	CHECK(LyndonWord({1, 1, 2}).to_string() == "⟨1,1,2⟩");
	CHECK(LyndonWord({1, 2, 3}).max_letter() == 3);
}

TEST_CASE("is_lyndon agrees with the rotation test on every short word")
{
	for (int n = 1; n <= 3; ++n)
		for (int d = 1; d <= 7; ++d)
			for (const auto &w : oracle::all_words(n, d))
				CHECK(is_lyndon(w) == oracle::lyndon_by_rotation(w));
}

TEST_CASE("lyndon_basis enumerates exactly the Lyndon words, in lexicographic order")
{
	for (int n = 1; n <= 4; ++n)
		for (int d = 1; d <= 6; ++d) {
			std::vector<std::vector<Letter>> expected;
			for (const auto &w : oracle::all_words(n, d))
				if (oracle::lyndon_by_rotation(w))
					expected.push_back(w);
			std::vector<std::vector<Letter>> got;
			for (const auto &w : lyndon_basis(n, d))
				got.push_back(w.letters());
			CHECK(std::is_sorted(got.begin(), got.end()));
			CHECK(got == expected);
		}
}

TEST_CASE("necklace formula")
{
	CHECK(free_lie_dim(2, 1) == 2);
	CHECK(free_lie_dim(2, 2) == 1);
	CHECK(free_lie_dim(2, 3) == 2);
	CHECK(free_lie_dim(2, 4) == 3);
	CHECK(free_lie_dim(2, 5) == 6);
	CHECK(free_lie_dim(2, 6) == 9);
	CHECK(free_lie_dim(3, 3) == 8);
	CHECK(free_lie_dim(3, 4) == 18);
	CHECK(free_lie_dim(4, 4) == 60);
	CHECK(free_lie_dim(3, 12) == 44220);
	CHECK_THROWS_AS(free_lie_dim(1000, 40), std::overflow_error);
}

TEST_CASE("standard factorization uses the longest proper Lyndon suffix")
{
	auto [u, v] = standard_factorization(LyndonWord({1, 1, 2}));
	CHECK(u == LyndonWord({1}));
	CHECK(v == LyndonWord({1, 2}));
	auto [u2, v2] = standard_factorization(LyndonWord({1, 2, 1, 3}));
	CHECK(u2 == LyndonWord({1, 2}));
	CHECK(v2 == LyndonWord({1, 3}));
	auto [u3, v3] = standard_factorization(LyndonWord({1, 1, 2, 1, 2}));
	CHECK(u3 == LyndonWord({1, 1, 2}));
	CHECK(v3 == LyndonWord({1, 2}));
}

TEST_CASE("small brackets in the Lyndon basis")
{
	auto x1 = x(2, 1), x2 = x(2, 2);
	CHECK(bracket(x1, x2) == FreeLieElement::basis(2, LyndonWord({1, 2})));
	CHECK(bracket(x2, x1) == FreeLieElement::basis(2, LyndonWord({1, 2}), -1));
	CHECK(bracket(x1, x1).is_zero());
	// [x2,[x1,x2]] = -[[x1,x2],x2] = -P(122)
	CHECK(bracket(x2, bracket(x1, x2)) == FreeLieElement::basis(2, LyndonWord({1, 2, 2}), -1));
	// [[x1,x2],x1] = -[x1,[x1,x2]] = -P(112)
	CHECK(bracket(bracket(x1, x2), x1) == FreeLieElement::basis(2, LyndonWord({1, 1, 2}), -1));
	CHECK_THROWS_AS(bracket(x(2, 1), x(3, 1)), std::invalid_argument);
	CHECK_THROWS_AS(x(2, 3), std::invalid_argument);
}

TEST_CASE("bracket agrees with the commutator in the tensor algebra")
{
	std::mt19937_64 rng(2024);
	for (int k = 0; k < 150; ++k) {
		const int n = 2 + k % 3;
		std::uniform_int_distribution<int> deg(1, 4);
		auto a = oracle::random_homogeneous(rng, n, deg(rng));
		auto b = oracle::random_homogeneous(rng, n, deg(rng));
		CHECK(oracle::expand(bracket(a, b)) == oracle::commutator(oracle::expand(a), oracle::expand(b)));
	}
}

TEST_CASE("standard bracketings expand to independent polynomials")
{
	// Leading word of P(w) is w itself with coefficient 1.
	for (int d = 1; d <= 6; ++d)
		for (const auto &w : lyndon_basis(3, d)) {
			auto p = oracle::expand_word(w.letters());
			REQUIRE(p.count(w.letters()) == 1);
			CHECK(p.at(w.letters()) == Scalar(1));
			for (const auto &[u, c] : p)
				CHECK(u >= w.letters());
		}
}

TEST_CASE("element operations")
{
	auto a = x(3, 1) + Scalar(2) * bracket(x(3, 1), x(3, 2));
	CHECK(a.degrees() == std::set<int>{1, 2});
	CHECK_FALSE(a.is_homogeneous());
	CHECK(a.homogeneous_part(2) == Scalar(2) * bracket(x(3, 1), x(3, 2)));
	CHECK(a.coefficient(LyndonWord({1, 2})) == Scalar(2));
	CHECK(a.coefficient(LyndonWord({2, 3})).is_zero());
	CHECK((a - a).is_zero());
	CHECK_THROWS_AS(a + x(2, 1), std::invalid_argument);

	const std::vector<Scalar> cs{Scalar(2), Scalar::i()};
	const std::vector<FreeLieElement> es{x(2, 1), x(2, 2)};
	CHECK(scalar_combine(cs, es) == Scalar(2) * x(2, 1) + Scalar::i() * x(2, 2));
	CHECK_THROWS_AS(scalar_combine(std::vector<Scalar>{Scalar(1)}, es), std::invalid_argument);
}

TEST_CASE("antisymmetry, Jacobi and grading on random elements")
{
	std::mt19937_64 rng(77);
	std::uniform_int_distribution<int> deg(1, 4);
	for (int k = 0; k < 100; ++k) {
		auto a = oracle::random_homogeneous(rng, 3, deg(rng));
		auto b = oracle::random_homogeneous(rng, 3, deg(rng));
		auto c = oracle::random_homogeneous(rng, 3, deg(rng));
		CHECK((bracket(a, b) + bracket(b, a)).is_zero());
		CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
		auto ab = bracket(a, b);
		if (!ab.is_zero())
			CHECK(ab.degrees() == std::set<int>{*a.degrees().begin() + *b.degrees().begin()});
		CHECK(bracket(a, b + c) == bracket(a, b) + bracket(a, c));
		CHECK(bracket(Scalar::i() * a, b) == Scalar::i() * bracket(a, b));
	}
}

TEST_CASE("bracket cache is safe under concurrent use")
{
	// Each thread computes the same products; results must agree with a
	// single-threaded pass.
	const auto words = lyndon_basis(4, 3);
	auto work = [&](std::vector<FreeLieElement> &out) {
		for (const auto &u : words)
			for (const auto &v : lyndon_basis(4, 2))
				out.push_back(bracket(FreeLieElement::basis(4, u), FreeLieElement::basis(4, v)));
	};
	std::vector<std::vector<FreeLieElement>> results(4);
	std::vector<std::thread> threads;
	for (auto &r : results)
		threads.emplace_back(work, std::ref(r));
	for (auto &t : threads)
		t.join();
	std::vector<FreeLieElement> serial;
	work(serial);
	for (const auto &r : results)
		CHECK(r == serial);
}

} // TEST_SUITE
