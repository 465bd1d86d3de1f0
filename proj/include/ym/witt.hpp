#pragma once

// Witt algebra with basis e_n (n in Z), [e_n, e_m] = (m - n) e_{m+n}, and its
// central extension Vir = W + k.c with cocycle delta_{m+n,0} (m^3 - m)/12 c.

#include "ym/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace ym {

class WittElement {
public:
	using Terms = std::map<long, Scalar>;

	WittElement() = default;

	static WittElement basis(long index, Scalar c = 1);
	static WittElement central_element(Scalar c = 1);

	const Terms &terms() const { return terms_; }
	const Scalar &central() const { return central_; }
	bool is_zero() const { return terms_.empty() && central_.is_zero(); }
	Scalar coefficient(long index) const;

	void add_term(long index, const Scalar &c);
	void add_central(const Scalar &c) { central_ += c; }

	WittElement &operator+=(const WittElement &o);
	WittElement &operator*=(const Scalar &c);
	friend WittElement operator+(WittElement a, const WittElement &b) { return a += b; }
	friend WittElement operator-(WittElement a, const WittElement &b) { return a += Scalar(-1) * b; }
	friend WittElement operator*(const Scalar &c, WittElement a) { return a *= c; }

	friend bool operator==(const WittElement &, const WittElement &) = default;

	// e.g. "5*e_1", "-4*e_0 - 1/2*c"
	std::string to_string() const;

private:
	Terms terms_;
	Scalar central_;
};

// Central terms are produced only when virasoro is set; central components
// of the inputs are always ignored by the bracket.
WittElement witt_bracket(const WittElement &u, const WittElement &v, bool virasoro);

struct WindowReport {
	int depth = 0;
	long window = 0;
	bool virasoro = false;
	std::vector<long> covered;
	bool central_covered = false;
	std::size_t span_dim = 0;

	bool covers_window() const { return covered.size() == static_cast<std::size_t>(2 * window + 1); }
};

// Finite evidence for generation. Round 1 is the generator span; round k adds
// brackets of elements found in round k-1 with everything found so far.
// Bracket products are kept only when their e-support lies in |n| <= window,
// so every retained element genuinely lies in the generated subalgebra.
// Reports which e_n with |n| <= window lie in the span of what was found.
WindowReport generated_window(const std::vector<WittElement> &gens, int depth, long window, bool virasoro = false);

} // namespace ym
