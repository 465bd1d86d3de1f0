#include "ym/ym_quotient.hpp"

#include <algorithm>
#include <string>

namespace ym {

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::runtime_error("degree " + std::to_string(degree) + " exceeds the degree cap " + std::to_string(cap)),
      degree_(degree), cap_(cap)
{
}

YangMillsPresentation ym_relations(int n, bool strong)
{
	if (n < 1)
		throw std::invalid_argument("ym_relations requires n >= 1");
	YangMillsPresentation pres{n, strong, {}};
	std::vector<FreeLieElement> x;
	for (int j = 1; j <= n; ++j)
		x.push_back(FreeLieElement::generator(n, j));
	if (strong) {
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				pres.relators.push_back(bracket(x[i], bracket(x[i], x[j])));
		return pres;
	}
	for (int j = 0; j < n; ++j) {
		FreeLieElement r(n);
		for (int i = 0; i < n; ++i)
			r += bracket(x[i], bracket(x[i], x[j]));
		pres.relators.push_back(std::move(r));
	}
	return pres;
}

LyndonCoordinates::LyndonCoordinates(int n, int d) : n_(n), d_(d), words_(lyndon_basis(n, d))
{
	for (std::size_t k = 0; k < words_.size(); ++k)
		index_.emplace(words_[k], k);
}

SparseVector LyndonCoordinates::coords(const FreeLieElement &a) const
{
	SparseVector v;
	for (const auto &[w, c] : a.terms()) {
		auto it = index_.find(w);
		if (it == index_.end())
			throw std::invalid_argument("word " + w.to_string() + " is not in the degree-" +
			                            std::to_string(d_) + " basis over " + std::to_string(n_) +
			                            " generators");
		v.emplace(it->second, c);
	}
	return v;
}

FreeLieElement LyndonCoordinates::element(const SparseVector &v) const
{
	FreeLieElement a(n_);
	for (const auto &[col, c] : v)
		a.add_term(words_.at(col), c);
	return a;
}

std::vector<GradedSubspace> ideal_components(const YangMillsPresentation &pres, int max_degree, int cap)
{
	if (max_degree > cap)
		throw DegreeCapExceeded(max_degree, cap);
	const int n = pres.n;
	std::vector<GradedSubspace> out;
	for (int d = 0; d <= max_degree; ++d) {
		std::size_t ambient = d >= 1 ? free_lie_dim(n, d) : 0;
		out.push_back({n, d, Subspace(ambient)});
	}
	if (max_degree < 3)
		return out;

	LyndonCoordinates deg3(n, 3);
	for (const auto &r : pres.relators)
		if (!r.is_zero())
			out[3].rows.insert(deg3.coords(r));

	std::vector<FreeLieElement> x;
	for (int j = 1; j <= n; ++j)
		x.push_back(FreeLieElement::generator(n, j));

	LyndonCoordinates prev = std::move(deg3);
	for (int d = 4; d <= max_degree; ++d) {
		LyndonCoordinates next(n, d);
		for (const auto &row : out[d - 1].rows.rows()) {
			FreeLieElement b = prev.element(row);
			for (const auto &xk : x)
				out[d].rows.insert(next.coords(bracket(xk, b)));
		}
		prev = std::move(next);
	}
	return out;
}

GradedSubspace ideal_graded_component(const YangMillsPresentation &pres, int d, int cap)
{
	if (d > cap)
		throw DegreeCapExceeded(d, cap);
	if (d < 3) {
		std::size_t ambient = d >= 1 ? free_lie_dim(pres.n, d) : 0;
		return {pres.n, d, Subspace(ambient)};
	}
	return std::move(ideal_components(pres, d, cap)[d]);
}

std::vector<DimensionRow> dimension_table(int n, int max_degree, bool strong, int cap)
{
	if (n < 1 || max_degree < 1)
		throw std::invalid_argument("dimension_table requires n >= 1 and max_degree >= 1");
	auto ideal = ideal_components(ym_relations(n, strong), max_degree, cap);
	std::vector<DimensionRow> rows;
	for (int d = 1; d <= max_degree; ++d) {
		std::uint64_t free_dim = free_lie_dim(n, d);
		std::uint64_t ideal_dim = ideal[d].dim();
		rows.push_back({d, free_dim, ideal_dim, free_dim - ideal_dim});
	}
	return rows;
}

std::uint64_t ym_dim(int n, int d, bool strong, int cap)
{
	if (n < 1 || d < 1)
		throw std::invalid_argument("ym_dim requires n >= 1 and d >= 1");
	return dimension_table(n, d, strong, cap).back().ym_dim;
}

MembershipReport is_zero_in_ym(const YangMillsPresentation &pres, const FreeLieElement &a, int cap)
{
	if (a.generators() != pres.n && !a.is_zero())
		throw std::invalid_argument("element and presentation have different generator counts");
	MembershipReport report;
	auto degrees = a.degrees();
	if (degrees.empty())
		return report;
	const int top = *degrees.rbegin();
	if (top > cap)
		throw DegreeCapExceeded(top, cap);
	auto ideal = ideal_components(pres, std::max(top, 3), cap);
	for (int d : degrees) {
		FreeLieElement part = a.homogeneous_part(d);
		if (d < 3) {
			report.per_degree[d] = part.is_zero();
			continue;
		}
		report.per_degree[d] = ideal[d].rows.contains(LyndonCoordinates(pres.n, d).coords(part));
	}
	return report;
}

} // namespace ym
