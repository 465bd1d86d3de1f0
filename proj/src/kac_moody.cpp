#include "ym/kac_moody.hpp"

#include <algorithm>
#include <stdexcept>

namespace ym {

MatrixData::MatrixData(DenseMatrix entries) : entries_(std::move(entries))
{
	if (entries_.empty())
		throw std::invalid_argument("matrix must be nonempty");
	for (const auto &row : entries_)
		if (row.size() != entries_.size())
			throw std::invalid_argument("matrix is not square");
	rank_ = rank_fraction_free(entries_);
}

CartanCheck is_generalized_cartan(const MatrixData &a)
{
	const std::size_t m = a.size();
	auto at = [](std::size_t i, std::size_t j) {
		return "a" + std::to_string(i + 1) + std::to_string(j + 1);
	};
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if (!a(i, j).is_integer())
				return {false, "entry " + at(i, j) + " is not an integer"};
	for (std::size_t i = 0; i < m; ++i)
		if (!(a(i, i) == Scalar(2)))
			return {false, "diagonal entry " + at(i, i) + " is not 2"};
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if (i != j && sgn(a(i, j).re()) > 0)
				return {false, "off-diagonal entry " + at(i, j) + " is positive"};
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if (i != j && a(i, j).is_zero() && !a(j, i).is_zero())
				return {false, at(i, j) + " is zero but " + at(j, i) + " is not"};
	return {};
}

RealizationOfMatrix build_realization(const MatrixData &a)
{
	const std::size_t m = a.size();
	const std::size_t r = a.rank();
	const std::size_t h_dim = 2 * m - r;

	// Greedy scan keeps the lexicographically first maximal independent set
	// of columns of A.
	Subspace columns(m);
	std::vector<std::size_t> dependent;
	for (std::size_t j = 0; j < m; ++j) {
		SparseVector col;
		for (std::size_t i = 0; i < m; ++i)
			if (!a(i, j).is_zero())
				col.emplace(i, a(i, j));
		if (!columns.insert(std::move(col)))
			dependent.push_back(j);
	}
	if (dependent.size() != m - r)
		throw std::logic_error("column scan disagrees with the fraction-free rank");

	RealizationOfMatrix out;
	out.h_dim = h_dim;
	out.pi.assign(m, std::vector<Scalar>(h_dim));
	out.pi_check.assign(m, std::vector<Scalar>(h_dim));
	for (std::size_t i = 0; i < m; ++i)
		out.pi_check[i][i] = 1;
	for (std::size_t j = 0; j < m; ++j)
		for (std::size_t i = 0; i < m; ++i)
			out.pi[j][i] = a(i, j);
	for (std::size_t k = 0; k < dependent.size(); ++k)
		out.pi[dependent[k]][m + k] = 1;

	if (!verify_realization(out, a))
		throw std::logic_error("realization failed verification");
	return out;
}

DenseMatrix pairing(const RealizationOfMatrix &r)
{
	const std::size_t m = r.pi.size();
	DenseMatrix out(m, std::vector<Scalar>(m));
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < r.h_dim; ++k)
				out[i][j] += r.pi_check[i][k] * r.pi[j][k];
	return out;
}

bool verify_realization(const RealizationOfMatrix &r, const MatrixData &a)
{
	const std::size_t m = a.size();
	if (r.h_dim != 2 * m - a.rank() || r.pi.size() != m || r.pi_check.size() != m)
		return false;
	for (std::size_t i = 0; i < m; ++i)
		if (r.pi[i].size() != r.h_dim || r.pi_check[i].size() != r.h_dim)
			return false;
	if (rank_fraction_free(r.pi) != m || rank_fraction_free(r.pi_check) != m)
		return false;
	return pairing(r) == a.entries();
}

std::size_t ym_quotient_bound(const MatrixData &a)
{
	const std::size_t m = a.size(), r = a.rank();
	if (r + 2 >= m)
		return 4;
	return std::max<std::size_t>(4, 2 * (m - r));
}

} // namespace ym
