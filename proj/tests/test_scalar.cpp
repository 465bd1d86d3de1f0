#include "ym/scalar.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using ym::Scalar;

TEST_SUITE("scalar") {

TEST_CASE("parse accepts the documented grammar")
{
	CHECK(Scalar::parse("3/2") == Scalar::rational(3, 2));
	CHECK(Scalar::parse("-1+2i") == Scalar(-1) + Scalar(2) * Scalar::i());
	CHECK(Scalar::parse("i") == Scalar::i());
	CHECK(Scalar::parse("-i") == -Scalar::i());
	CHECK(Scalar::parse("-1/2i") == Scalar::rational(-1, 2) * Scalar::i());
	CHECK(Scalar::parse("3-1/2i") == Scalar(3) - Scalar::rational(1, 2) * Scalar::i());
	CHECK(Scalar::parse(" 4/6 ") == Scalar::rational(2, 3));
	CHECK(Scalar::parse("0").is_zero());
	CHECK(Scalar::parse("+5") == Scalar(5));
}

TEST_CASE("parse rejects malformed text")
{
	CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
	CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
	CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
	CHECK_THROWS_AS(Scalar::parse("2+"), std::invalid_argument);
	CHECK_THROWS_AS(Scalar::rational(1, 0), std::invalid_argument);
}

TEST_CASE("to_string is canonical and round-trips")
{
	CHECK(Scalar::rational(6, -4).to_string() == "-3/2");
	CHECK(Scalar::i().to_string() == "i");
	CHECK((Scalar(0) - Scalar::i()).to_string() == "-i");
	CHECK((Scalar(1) + Scalar::rational(1, 2) * Scalar::i()).to_string() == "1+1/2i");
	CHECK((Scalar(-2) - Scalar(3) * Scalar::i()).to_string() == "-2-3i");

	std::mt19937_64 rng(11);
	std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
	for (int k = 0; k < 300; ++k) {
		Scalar x = Scalar::rational(num(rng), den(rng)) + Scalar::rational(num(rng), den(rng)) * Scalar::i();
		CHECK(Scalar::parse(x.to_string()) == x);
	}
}

TEST_CASE("field arithmetic")
{
	const Scalar i = Scalar::i();
	CHECK(i * i == Scalar(-1));
	CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
	CHECK(Scalar(1) / (Scalar(1) + i) == Scalar::rational(1, 2) - Scalar::rational(1, 2) * i);
	CHECK((Scalar(3) + 4 * i).norm() == 25);
	CHECK((Scalar(3) + 4 * i).conj() == Scalar(3) - 4 * i);
	CHECK(Scalar(4).is_integer());
	CHECK_FALSE(Scalar::rational(1, 2).is_integer());
	CHECK_FALSE(i.is_integer());
	CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);

	std::mt19937_64 rng(5);
	std::uniform_int_distribution<long> d(-9, 9);
	for (int k = 0; k < 200; ++k) {
		Scalar a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK((a * b) * c == a * (b * c));
		if (!b.is_zero())
			CHECK((a / b) * b == a);
	}
}

} // TEST_SUITE
