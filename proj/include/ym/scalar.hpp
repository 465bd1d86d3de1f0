#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ym {

// Element of Q(i). Both parts are kept canonical (lowest terms, positive
// denominator) after every operation, so == is structural.
class GaussianRational {
public:
	GaussianRational() = default;
	GaussianRational(long re) : re_(re) {}
	GaussianRational(mpq_class re, mpq_class im = 0);

	static GaussianRational i() { return {0, 1}; }
	static GaussianRational rational(long num, long den);

	// Text grammar: "3/2", "-1+2i", "i", "-1/2i", "3-1/2i", "0".
	static GaussianRational parse(std::string_view text);

	const mpq_class &re() const { return re_; }
	const mpq_class &im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	bool is_integer() const;

	GaussianRational conj() const { return {re_, -im_}; }
	mpq_class norm() const { return re_ * re_ + im_ * im_; }

	std::string to_string() const;

	GaussianRational &operator+=(const GaussianRational &o);
	GaussianRational &operator-=(const GaussianRational &o);
	GaussianRational &operator*=(const GaussianRational &o);
	GaussianRational &operator/=(const GaussianRational &o);

	friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
	friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
	friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
	GaussianRational operator-() const { return {-re_, -im_}; }

	friend bool operator==(const GaussianRational &a, const GaussianRational &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

private:
	mpq_class re_{0};
	mpq_class im_{0};
};

using Scalar = GaussianRational;

std::ostream &operator<<(std::ostream &os, const GaussianRational &x);

// One term c*name of a linear combination: "2*e", " - h", " + (1+i)*f".
// Real negative coefficients fold into the separator.
std::string format_term(const GaussianRational &c, const std::string &name, bool first);

} // namespace ym
