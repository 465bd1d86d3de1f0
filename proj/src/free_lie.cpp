#include "ym/free_lie.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ym {

bool is_lyndon(std::span<const Letter> letters)
{
	const std::size_t len = letters.size();
	if (len == 0)
		return false;
	for (std::size_t shift = 1; shift < len; ++shift) {
		// Compare letters against its rotation by `shift`.
		for (std::size_t k = 0; k < len; ++k) {
			Letter a = letters[k];
			Letter b = letters[(k + shift) % len];
			if (a < b)
				break;
			if (a > b || k + 1 == len)
				return false;
		}
	}
	return true;
}

LyndonWord::LyndonWord(std::initializer_list<int> letters)
{
	for (int l : letters) {
		if (l < 1 || l > 255)
			throw std::invalid_argument("letter out of range");
		letters_.push_back(static_cast<Letter>(l));
	}
	if (!is_lyndon(letters_))
		throw std::invalid_argument("not a Lyndon word: " + to_string());
}

LyndonWord::LyndonWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
	if (std::find(letters_.begin(), letters_.end(), Letter{0}) != letters_.end())
		throw std::invalid_argument("letter out of range");
	if (!is_lyndon(letters_))
		throw std::invalid_argument("not a Lyndon word: " + to_string());
}

LyndonWord LyndonWord::trusted(std::vector<Letter> letters)
{
	LyndonWord w;
	w.letters_ = std::move(letters);
	return w;
}

Letter LyndonWord::max_letter() const
{
	return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string LyndonWord::to_string() const
{
	std::string s = "⟨";
	for (std::size_t k = 0; k < letters_.size(); ++k) {
		if (k)
			s += ",";
		s += std::to_string(letters_[k]);
	}
	return s + "⟩";
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord &w)
{
	const auto &l = w.letters();
	if (l.size() < 2)
		throw std::invalid_argument("standard factorization needs degree >= 2");
	for (std::size_t k = 1; k < l.size(); ++k) {
		std::span<const Letter> suffix(l.data() + k, l.size() - k);
		if (is_lyndon(suffix))
			return {LyndonWord::trusted({l.begin(), l.begin() + k}),
			        LyndonWord::trusted({l.begin() + k, l.end()})};
	}
	// The last letter is always Lyndon, so this is unreachable.
	throw std::logic_error("no Lyndon suffix");
}

std::vector<LyndonWord> lyndon_basis(int n, int d)
{
	if (n < 1 || n > 255 || d < 1)
		throw std::invalid_argument("lyndon_basis requires n >= 1 and d >= 1");
	// Duval's generation of all Lyndon words of length <= d, in lex order.
	std::vector<LyndonWord> out;
	std::vector<Letter> w{1};
	const auto top = static_cast<Letter>(n);
	while (!w.empty()) {
		if (static_cast<int>(w.size()) == d)
			out.push_back(LyndonWord::trusted(w));
		const std::size_t period = w.size();
		while (static_cast<int>(w.size()) < d)
			w.push_back(w[w.size() - period]);
		while (!w.empty() && w.back() == top)
			w.pop_back();
		if (!w.empty())
			++w.back();
	}
	return out;
}

namespace {

int moebius(int k)
{
	int mu = 1;
	for (int p = 2; p * p <= k; ++p) {
		if (k % p == 0) {
			k /= p;
			if (k % p == 0)
				return 0;
			mu = -mu;
		}
	}
	return k > 1 ? -mu : mu;
}

} // namespace

std::uint64_t free_lie_dim(int n, int d)
{
	if (n < 1 || d < 1)
		throw std::invalid_argument("free_lie_dim requires n >= 1 and d >= 1");
	mpz_class sum = 0;
	for (int e = 1; e <= d; ++e) {
		if (d % e)
			continue;
		mpz_class power;
		mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
		sum += moebius(d / e) * power;
	}
	sum /= d;
	if (!sum.fits_ulong_p())
		throw std::overflow_error("free Lie dimension does not fit in 64 bits");
	return sum.get_ui();
}

// ---------------------------------------------------------------------------

FreeLieElement FreeLieElement::generator(int n, int j)
{
	if (j < 1 || j > n)
		throw std::invalid_argument("generator index out of range");
	return basis(n, LyndonWord::trusted({static_cast<Letter>(j)}));
}

FreeLieElement FreeLieElement::basis(int n, LyndonWord w, Scalar c)
{
	if (w.max_letter() > n)
		throw std::invalid_argument("word " + w.to_string() + " uses letters beyond n");
	FreeLieElement e(n);
	e.add_term(w, c);
	return e;
}

Scalar FreeLieElement::coefficient(const LyndonWord &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Scalar{} : it->second;
}

std::set<int> FreeLieElement::degrees() const
{
	std::set<int> out;
	for (const auto &[w, c] : terms_)
		out.insert(w.degree());
	return out;
}

FreeLieElement FreeLieElement::homogeneous_part(int d) const
{
	FreeLieElement out(n_);
	for (const auto &[w, c] : terms_)
		if (w.degree() == d)
			out.terms_.emplace(w, c);
	return out;
}

void FreeLieElement::add_term(const LyndonWord &w, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void FreeLieElement::check_same_space(const FreeLieElement &o) const
{
	if (n_ != o.n_)
		throw std::invalid_argument("free Lie elements over different generator counts");
}

FreeLieElement &FreeLieElement::operator+=(const FreeLieElement &o)
{
	check_same_space(o);
	for (const auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

FreeLieElement &FreeLieElement::operator-=(const FreeLieElement &o)
{
	check_same_space(o);
	for (const auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

FreeLieElement &FreeLieElement::operator*=(const Scalar &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

std::string FreeLieElement::to_string() const
{
	std::string out;
	for (const auto &[w, c] : terms_)
		out += format_term(c, w.to_string(), out.empty());
	return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

namespace {

class BracketCache {
public:
	using Key = std::pair<LyndonWord, LyndonWord>;

	const FreeLieElement::Terms *find(const Key &k) const
	{
		std::shared_lock lock(mutex_);
		auto it = table_.find(k);
		return it == table_.end() ? nullptr : &it->second;
	}

	// Node-based map: references stay valid across later insertions.
	const FreeLieElement::Terms &insert(Key k, FreeLieElement::Terms v)
	{
		std::unique_lock lock(mutex_);
		return table_.try_emplace(std::move(k), std::move(v)).first->second;
	}

private:
	mutable std::shared_mutex mutex_;
	std::map<Key, FreeLieElement::Terms> table_;
};

BracketCache &cache()
{
	static BracketCache instance;
	return instance;
}

void accumulate(FreeLieElement::Terms &acc, const LyndonWord &w, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = acc.try_emplace(w, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			acc.erase(it);
	}
}

FreeLieElement::Terms compute_bracket(const LyndonWord &u, const LyndonWord &v)
{
	FreeLieElement::Terms out;
	if (v < u) {
		for (const auto &[w, c] : bracket_words(v, u))
			out.emplace(w, -c);
		return out;
	}
	// u < v, so uv is Lyndon. It is the standard factorization of uv exactly
	// when u is a letter or the right standard factor of u is >= v.
	if (u.degree() == 1 || standard_factorization(u).second >= v) {
		std::vector<Letter> uv = u.letters();
		uv.insert(uv.end(), v.letters().begin(), v.letters().end());
		out.emplace(LyndonWord::trusted(std::move(uv)), Scalar(1));
		return out;
	}
	// [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
	auto [u1, u2] = standard_factorization(u);
	for (const auto &[w, c] : bracket_words(u2, v))
		for (const auto &[w2, c2] : bracket_words(u1, w))
			accumulate(out, w2, c * c2);
	for (const auto &[w, c] : bracket_words(u1, v))
		for (const auto &[w2, c2] : bracket_words(u2, w))
			accumulate(out, w2, -(c * c2));
	return out;
}

} // namespace

const FreeLieElement::Terms &bracket_words(const LyndonWord &u, const LyndonWord &v)
{
	static const FreeLieElement::Terms empty;
	if (u == v)
		return empty;
	BracketCache::Key key{u, v};
	if (const auto *hit = cache().find(key))
		return *hit;
	return cache().insert(std::move(key), compute_bracket(u, v));
}

FreeLieElement bracket(const FreeLieElement &a, const FreeLieElement &b)
{
	if (a.generators() != b.generators())
		throw std::invalid_argument("bracket of free Lie elements over different generator counts");
	FreeLieElement out(a.generators());
	for (const auto &[u, cu] : a.terms())
		for (const auto &[v, cv] : b.terms()) {
			Scalar c = cu * cv;
			for (const auto &[w, cw] : bracket_words(u, v))
				out.add_term(w, c * cw);
		}
	return out;
}

FreeLieElement scalar_combine(std::span<const Scalar> coeffs, std::span<const FreeLieElement> elems)
{
	if (coeffs.size() != elems.size())
		throw std::invalid_argument("scalar_combine: length mismatch");
	if (elems.empty())
		return FreeLieElement{};
	FreeLieElement out(elems.front().generators());
	for (std::size_t k = 0; k < elems.size(); ++k)
		out += coeffs[k] * elems[k];
	return out;
}

} // namespace ym
