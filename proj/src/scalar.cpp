#include "ym/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <regex>
#include <stdexcept>

namespace ym {

namespace {

mpq_class parse_rational(const std::string &text, std::string_view whole)
{
	static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
	if (!std::regex_match(text, pattern))
		throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
	auto slash = text.find('/');
	if (slash != std::string::npos && mpz_class(text.substr(slash + 1)) == 0)
		throw std::invalid_argument("zero denominator in scalar '" + std::string(whole) + "'");
	mpq_class q(text[0] == '+' ? text.substr(1) : text, 10);
	q.canonicalize();
	return q;
}

std::string imaginary_text(const mpq_class &q)
{
	if (q == 1)
		return "i";
	if (q == -1)
		return "-i";
	return q.get_str() + "i";
}

} // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

GaussianRational GaussianRational::rational(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("zero denominator");
	return {mpq_class(num, den), 0};
}

GaussianRational GaussianRational::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	if (s.empty())
		throw std::invalid_argument("empty scalar");
	if (s.back() != 'i')
		return {parse_rational(s, text), 0};

	s.pop_back();
	// Split at the last sign that is not the leading one.
	std::size_t split = std::string::npos;
	for (std::size_t k = s.size(); k-- > 1;)
		if (s[k] == '+' || s[k] == '-') {
			split = k;
			break;
		}
	std::string real_part = split == std::string::npos ? "0" : s.substr(0, split);
	std::string imag_part = split == std::string::npos ? s : s.substr(split);
	mpq_class im;
	if (imag_part.empty() || imag_part == "+")
		im = 1;
	else if (imag_part == "-")
		im = -1;
	else
		im = parse_rational(imag_part, text);
	return {parse_rational(real_part, text), im};
}

bool GaussianRational::is_integer() const
{
	return is_real() && re_.get_den() == 1;
}

std::string GaussianRational::to_string() const
{
	if (sgn(im_) == 0)
		return re_.get_str();
	if (sgn(re_) == 0)
		return imaginary_text(im_);
	if (sgn(im_) > 0)
		return re_.get_str() + "+" + imaginary_text(im_);
	return re_.get_str() + "-" + imaginary_text(-im_);
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
	if (sgn(o.im_) == 0) {
		re_ *= o.re_;
		im_ *= o.re_;
		return *this;
	}
	mpq_class re = re_ * o.re_ - im_ * o.im_;
	mpq_class im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero in Q(i)");
	if (sgn(o.im_) == 0) {
		re_ /= o.re_;
		im_ /= o.re_;
		return *this;
	}
	mpq_class n = o.norm();
	*this *= o.conj();
	re_ /= n;
	im_ /= n;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &x)
{
	return os << x.to_string();
}

std::string format_term(const GaussianRational &c, const std::string &name, bool first)
{
	std::string out;
	GaussianRational a = c;
	const bool negative = a.is_real() && sgn(a.re()) < 0;
	if (negative)
		a = -a;
	if (first)
		out = negative ? "-" : "";
	else
		out = negative ? " - " : " + ";
	if (a == GaussianRational(1))
		return out + name;
	if (a.is_real())
		return out + a.to_string() + "*" + name;
	return out + "(" + a.to_string() + ")*" + name;
}

} // namespace ym
