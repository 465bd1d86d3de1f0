#include "ym/witt.hpp"

#include "ym/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ym {

WittElement WittElement::basis(long index, Scalar c)
{
	WittElement w;
	w.add_term(index, c);
	return w;
}

WittElement WittElement::central_element(Scalar c)
{
	WittElement w;
	w.central_ = std::move(c);
	return w;
}

Scalar WittElement::coefficient(long index) const
{
	auto it = terms_.find(index);
	return it == terms_.end() ? Scalar{} : it->second;
}

void WittElement::add_term(long index, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(index, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

WittElement &WittElement::operator+=(const WittElement &o)
{
	for (const auto &[n, c] : o.terms_)
		add_term(n, c);
	central_ += o.central_;
	return *this;
}

WittElement &WittElement::operator*=(const Scalar &c)
{
	if (c.is_zero()) {
		terms_.clear();
		central_ = 0;
		return *this;
	}
	for (auto &[n, v] : terms_)
		v *= c;
	central_ *= c;
	return *this;
}

std::string WittElement::to_string() const
{
	std::string out;
	for (const auto &[n, c] : terms_)
		out += format_term(c, "e_" + std::to_string(n), out.empty());
	if (!central_.is_zero())
		out += format_term(central_, "c", out.empty());
	return out.empty() ? "0" : out;
}

WittElement witt_bracket(const WittElement &u, const WittElement &v, bool virasoro)
{
	WittElement out;
	for (const auto &[n, a] : u.terms())
		for (const auto &[m, b] : v.terms()) {
			if (n == m)
				continue;
			Scalar ab = a * b;
			out.add_term(n + m, Scalar(m - n) * ab);
			if (virasoro && n + m == 0)
				out.add_central(Scalar::rational(m * m * m - m, 12) * ab);
		}
	return out;
}

namespace {

// Column 0 is c and column 1 is e_0; e_n sits at 2n for n > 0, 2|n| + 1 for n < 0.
std::size_t column(long n)
{
	const auto a = static_cast<std::size_t>(std::labs(n));
	return n > 0 ? 2 * a : (n < 0 ? 2 * a + 1 : 1);
}

SparseVector coords(const WittElement &w)
{
	SparseVector v;
	if (!w.central().is_zero())
		v.emplace(0, w.central());
	for (const auto &[n, c] : w.terms())
		v.emplace(column(n), c);
	return v;
}

bool inside(const WittElement &w, long window)
{
	for (const auto &[n, c] : w.terms())
		if (std::labs(n) > window)
			return false;
	return true;
}

} // namespace

WindowReport generated_window(const std::vector<WittElement> &gens, int depth, long window, bool virasoro)
{
	if (depth < 1 || window < 1)
		throw std::invalid_argument("generated_window requires depth >= 1 and window >= 1");
	Subspace span;
	std::vector<WittElement> found;
	std::vector<WittElement> frontier;
	for (const auto &g : gens)
		if (span.insert(coords(g))) {
			found.push_back(g);
			frontier.push_back(g);
		}
	for (int round = 2; round <= depth && !frontier.empty(); ++round) {
		std::vector<WittElement> fresh;
		for (const auto &a : frontier)
			for (const auto &b : found) {
				WittElement x = witt_bracket(a, b, virasoro);
				if (x.is_zero() || !inside(x, window))
					continue;
				if (span.insert(coords(x)))
					fresh.push_back(std::move(x));
			}
		found.insert(found.end(), fresh.begin(), fresh.end());
		frontier = std::move(fresh);
	}

	WindowReport report{depth, window, virasoro, {}, false, span.dim()};
	for (long n = -window; n <= window; ++n)
		if (span.contains(SparseVector{{column(n), Scalar(1)}}))
			report.covered.push_back(n);
	report.central_covered = span.contains(SparseVector{{0, Scalar(1)}});
	return report;
}

} // namespace ym
