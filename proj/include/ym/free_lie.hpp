#pragma once

// Free Lie algebra f(n) over Q(i) in the Lyndon basis.
//
// Conventions: letters are 1..n ordered 1 < 2 < ... < n; a word is Lyndon
// when it is strictly smaller (lexicographically, a proper prefix being
// smaller) than each of its proper rotations. The basis element attached to
// a Lyndon word w is its standard bracketing P(w) = [P(u), P(v)], where v is
// the longest proper Lyndon suffix of w. All signs in coefficient tables
// are relative to this convention.

#include "ym/scalar.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ym {

using Letter = std::uint8_t;

// Enumeration-driven operations refuse degrees beyond this by default.
inline constexpr int kDefaultDegreeCap = 12;

bool is_lyndon(std::span<const Letter> letters);

class LyndonWord {
public:
	LyndonWord() = default;
	// Throws std::invalid_argument if the letters are not a Lyndon word.
	LyndonWord(std::initializer_list<int> letters);
	explicit LyndonWord(std::vector<Letter> letters);

	// No Lyndon check; for callers that already know the word is Lyndon.
	static LyndonWord trusted(std::vector<Letter> letters);

	int degree() const { return static_cast<int>(letters_.size()); }
	const std::vector<Letter> &letters() const { return letters_; }
	Letter max_letter() const;

	// Renders as "⟨1,1,2⟩".
	std::string to_string() const;

	// Plain lexicographic order.
	friend auto operator<=>(const LyndonWord &, const LyndonWord &) = default;

private:
	std::vector<Letter> letters_;
};

// Orders by degree first, then lexicographically.
struct ShortLex {
	bool operator()(const LyndonWord &a, const LyndonWord &b) const
	{
		if (a.degree() != b.degree())
			return a.degree() < b.degree();
		return a < b;
	}
};

// (u, v) with w = uv and v the longest proper Lyndon suffix. degree(w) >= 2.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord &w);

std::vector<LyndonWord> lyndon_basis(int n, int d);

// Necklace count (1/d) sum_{e|d} mu(d/e) n^e. Throws std::overflow_error if
// the value does not fit.
std::uint64_t free_lie_dim(int n, int d);

class FreeLieElement {
public:
	using Terms = std::map<LyndonWord, Scalar, ShortLex>;

	FreeLieElement() = default;
	explicit FreeLieElement(int n) : n_(n) {}

	static FreeLieElement generator(int n, int j);
	static FreeLieElement basis(int n, LyndonWord w, Scalar c = 1);

	int generators() const { return n_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coefficient(const LyndonWord &w) const;

	std::set<int> degrees() const;
	bool is_homogeneous() const { return degrees().size() <= 1; }
	FreeLieElement homogeneous_part(int d) const;

	// Adds c*w, dropping the entry if it cancels.
	void add_term(const LyndonWord &w, const Scalar &c);

	FreeLieElement &operator+=(const FreeLieElement &o);
	FreeLieElement &operator-=(const FreeLieElement &o);
	FreeLieElement &operator*=(const Scalar &c);

	friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement &b) { return a += b; }
	friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement &b) { return a -= b; }
	friend FreeLieElement operator*(const Scalar &c, FreeLieElement a) { return a *= c; }
	FreeLieElement operator-() const { return Scalar(-1) * *this; }

	friend bool operator==(const FreeLieElement &a, const FreeLieElement &b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}

	std::string to_string() const;

private:
	void check_same_space(const FreeLieElement &o) const;

	int n_ = 0;
	Terms terms_;
};

// [a, b] rewritten into the Lyndon basis. Throws std::invalid_argument on
// mismatched generator counts.
FreeLieElement bracket(const FreeLieElement &a, const FreeLieElement &b);

// [P(u), P(v)] for Lyndon words u, v, as a Lyndon-basis combination. Results
// are memoized in a process-wide cache guarded for concurrent readers.
const FreeLieElement::Terms &bracket_words(const LyndonWord &u, const LyndonWord &v);

FreeLieElement scalar_combine(std::span<const Scalar> coeffs, std::span<const FreeLieElement> elems);

} // namespace ym
