#include "ym/morphisms.hpp"

namespace ym {

GeneratorMorphism<FreeLieTarget> doubling_morphism(int m)
{
	if (m < 1)
		throw std::invalid_argument("doubling_morphism requires m >= 1");
	FreeLieTarget target{m};
	std::vector<FreeLieElement> images;
	for (int j = 1; j <= m; ++j)
		images.push_back(target.generator(j));
	for (int j = 1; j <= m; ++j)
		images.push_back(Scalar::i() * target.generator(j));
	return {target, std::move(images)};
}

GeneratorMorphism<FreeLieTarget> projection_morphism(int n, int m)
{
	if (m < 1 || m > n)
		throw std::invalid_argument("projection_morphism requires 1 <= m <= n");
	FreeLieTarget target{m};
	std::vector<FreeLieElement> images;
	for (int j = 1; j <= n; ++j)
		images.push_back(j <= m ? target.generator(j) : target.zero());
	return {target, std::move(images)};
}

bool factors_through_ym(const GeneratorMorphism<FreeLieTarget> &phi, bool strong)
{
	auto target_pres = ym_relations(phi.target().m, strong);
	for (const auto &r : relation_residuals(phi, strong))
		if (!r.is_zero() && !is_zero_in_ym(target_pres, r).all())
			return false;
	return true;
}

GeneratorMorphism<AlgebraTarget> yu_morphism()
{
	AlgebraTarget sl3{sl_algebra(3)};
	return {sl3, {sl3.basis("E12"), sl3.basis("E23"), sl3.basis("E31")}};
}

GeneratorMorphism<AlgebraTarget> pair_to_ym4_morphism(const AlgebraPtr &g, const TargetElement &a,
                                                      const TargetElement &b)
{
	if (a.algebra() != g || b.algebra() != g)
		throw std::invalid_argument("pair_to_ym4_morphism: elements must belong to the target algebra");
	return {AlgebraTarget{g}, {a, b, Scalar::i() * a, Scalar::i() * b}};
}

GeneratorMorphism<WittTarget> witt_virasoro_morphism(bool virasoro)
{
	auto a = WittElement::basis(-2);
	auto b = WittElement::basis(3);
	return {WittTarget{virasoro}, {a, b, Scalar::i() * a, Scalar::i() * b}};
}

Subspace image_closure(const GeneratorMorphism<AlgebraTarget> &phi)
{
	return subalgebra_closure(*phi.target().algebra, phi.images());
}

bool check_surjective(const GeneratorMorphism<AlgebraTarget> &phi)
{
	return image_closure(phi).dim() == phi.target().algebra->dim();
}

std::optional<bool> check_surjective(const GeneratorMorphism<FreeLieTarget> &phi)
{
	const int m = phi.target().m;
	Subspace span(static_cast<std::size_t>(m));
	for (const auto &x : phi.images()) {
		if (x.is_zero())
			continue;
		if (x.degrees() != std::set<int>{1})
			return std::nullopt;
		SparseVector v;
		for (const auto &[w, c] : x.terms())
			v.emplace(w.letters()[0] - 1u, c);
		span.insert(std::move(v));
	}
	// A graded morphism onto f(m) must hit V(m), and V(m) generates f(m).
	return span.dim() == static_cast<std::size_t>(m);
}

MorphismReport analyze(const GeneratorMorphism<AlgebraTarget> &phi, bool strong)
{
	MorphismReport report;
	report.residuals = relation_residuals(phi, strong);
	report.residuals_zero = all_zero(report.residuals);
	const auto &algebra = *phi.target().algebra;
	Subspace image = image_closure(phi);
	auto series = series_analysis(algebra, image);
	report.image_dim = image.dim();
	report.solvable = series.is_solvable;
	report.nilpotent = series.is_nilpotent;
	report.surjective = image.dim() == algebra.dim();
	return report;
}

} // namespace ym
