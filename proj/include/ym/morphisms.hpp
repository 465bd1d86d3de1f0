#pragma once

// Lie morphisms out of f(n) defined by the images of the generators x_1..x_n,
// evaluated through the standard bracketing of Lyndon words.

#include "ym/free_lie.hpp"
#include "ym/targets.hpp"
#include "ym/witt.hpp"
#include "ym/ym_quotient.hpp"

#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ym {

template <class T>
concept LieTarget = requires(const T &t, const typename T::Element &a, const Scalar &c) {
	{ t.zero() } -> std::same_as<typename T::Element>;
	{ t.bracket(a, a) } -> std::same_as<typename T::Element>;
	{ a + a } -> std::convertible_to<typename T::Element>;
	{ c * a } -> std::convertible_to<typename T::Element>;
	{ a.is_zero() } -> std::convertible_to<bool>;
	{ a.to_string() } -> std::convertible_to<std::string>;
};

// f(m) with generators y_1..y_m.
struct FreeLieTarget {
	using Element = FreeLieElement;
	int m = 1;

	Element zero() const { return FreeLieElement(m); }
	Element bracket(const Element &a, const Element &b) const { return ym::bracket(a, b); }
	Element generator(int j) const { return FreeLieElement::generator(m, j); }
};

struct AlgebraTarget {
	using Element = TargetElement;
	AlgebraPtr algebra;

	Element zero() const { return TargetElement(algebra, {}); }
	Element bracket(const Element &a, const Element &b) const { return bracket_in(*algebra, a, b); }
	Element basis(const std::string &label, Scalar c = 1) const { return TargetElement::basis(algebra, label, c); }
};

struct WittTarget {
	using Element = WittElement;
	bool virasoro = false;

	Element zero() const { return {}; }
	Element bracket(const Element &a, const Element &b) const { return witt_bracket(a, b, virasoro); }
};

template <LieTarget Target>
class GeneratorMorphism {
public:
	using Element = typename Target::Element;

	GeneratorMorphism(Target target, std::vector<Element> images)
	    : target_(std::move(target)), images_(std::move(images))
	{
		if (images_.empty())
			throw std::invalid_argument("a generator morphism needs at least one image");
	}

	int generators() const { return static_cast<int>(images_.size()); }
	const Target &target() const { return target_; }
	const std::vector<Element> &images() const { return images_; }

private:
	Target target_;
	std::vector<Element> images_;
};

namespace detail {

template <LieTarget Target>
const typename Target::Element &evaluate_word(const GeneratorMorphism<Target> &phi, const LyndonWord &w,
                                              std::map<LyndonWord, typename Target::Element> &memo)
{
	if (auto it = memo.find(w); it != memo.end())
		return it->second;
	typename Target::Element value = phi.target().zero();
	if (w.degree() == 1) {
		value = phi.images()[w.letters()[0] - 1];
	} else {
		auto [u, v] = standard_factorization(w);
		const auto &pu = evaluate_word(phi, u, memo);
		const auto &pv = evaluate_word(phi, v, memo);
		value = phi.target().bracket(pu, pv);
	}
	return memo.emplace(w, std::move(value)).first->second;
}

} // namespace detail

// Throws std::invalid_argument if a lives over more generators than phi has.
template <LieTarget Target>
typename Target::Element evaluate(const GeneratorMorphism<Target> &phi, const FreeLieElement &a)
{
	if (!a.is_zero() && a.generators() > phi.generators())
		throw std::invalid_argument("element over " + std::to_string(a.generators()) +
		                            " generators, morphism defined on " + std::to_string(phi.generators()));
	std::map<LyndonWord, typename Target::Element> memo;
	typename Target::Element out = phi.target().zero();
	for (const auto &[w, c] : a.terms())
		out = out + c * detail::evaluate_word(phi, w, memo);
	return out;
}

template <LieTarget Target>
std::vector<typename Target::Element> relation_residuals(const GeneratorMorphism<Target> &phi, bool strong = false)
{
	std::vector<typename Target::Element> out;
	for (const auto &r : ym_relations(phi.generators(), strong).relators)
		out.push_back(r.is_zero() ? phi.target().zero() : evaluate(phi, r));
	return out;
}

template <class Elements>
bool all_zero(const Elements &elems)
{
	for (const auto &e : elems)
		if (!e.is_zero())
			return false;
	return true;
}

// psi o phi for phi : f(n) -> f(m) and psi : f(m) -> T.
template <LieTarget Target>
GeneratorMorphism<Target> compose(const GeneratorMorphism<FreeLieTarget> &phi, const GeneratorMorphism<Target> &psi)
{
	if (phi.target().m != psi.generators())
		throw std::invalid_argument("compose: intermediate free Lie algebras differ");
	std::vector<typename Target::Element> images;
	for (const auto &x : phi.images())
		images.push_back(evaluate(psi, x));
	return GeneratorMorphism<Target>(psi.target(), std::move(images));
}

// x_j -> y_j, x_{m+j} -> i y_j for j = 1..m.
GeneratorMorphism<FreeLieTarget> doubling_morphism(int m);

// x_i -> x_i for i <= m, x_i -> 0 otherwise, into f(m).
GeneratorMorphism<FreeLieTarget> projection_morphism(int n, int m);

// True when every (strong) relator of the source maps into the Yang-Mills
// ideal of the target f(m), i.e. phi induces ym(n) -> ym(m).
bool factors_through_ym(const GeneratorMorphism<FreeLieTarget> &phi, bool strong = false);

// x1 -> E12, x2 -> E23, x3 -> E31 in sl(3).
GeneratorMorphism<AlgebraTarget> yu_morphism();

// (a, b, i a, i b) from ym(4).
GeneratorMorphism<AlgebraTarget> pair_to_ym4_morphism(const AlgebraPtr &g, const TargetElement &a,
                                                      const TargetElement &b);

// (e_{-2}, e_3, i e_{-2}, i e_3) from ym(4).
GeneratorMorphism<WittTarget> witt_virasoro_morphism(bool virasoro);

Subspace image_closure(const GeneratorMorphism<AlgebraTarget> &phi);

bool check_surjective(const GeneratorMorphism<AlgebraTarget> &phi);

// Decided only when every image is a combination of generators (degree 1);
// nullopt otherwise.
std::optional<bool> check_surjective(const GeneratorMorphism<FreeLieTarget> &phi);

struct MorphismReport {
	bool residuals_zero = false;
	std::vector<TargetElement> residuals;
	std::size_t image_dim = 0;
	bool solvable = false;
	bool nilpotent = false;
	bool surjective = false;
};

MorphismReport analyze(const GeneratorMorphism<AlgebraTarget> &phi, bool strong = false);

} // namespace ym
