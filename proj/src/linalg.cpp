#include "ym/linalg.hpp"

#include <utility>

namespace ym {

void axpy(SparseVector &y, const Scalar &a, const SparseVector &x)
{
	if (a.is_zero())
		return;
	for (const auto &[col, v] : x) {
		auto [it, fresh] = y.try_emplace(col, a * v);
		if (!fresh) {
			it->second += a * v;
			if (it->second.is_zero())
				y.erase(it);
		}
	}
}

SparseVector scaled(const SparseVector &x, const Scalar &a)
{
	SparseVector out;
	if (a.is_zero())
		return out;
	for (const auto &[col, v] : x)
		out.emplace(col, a * v);
	return out;
}

SparseVector Subspace::reduce(SparseVector v) const
{
	// A row only touches columns at or after its pivot, so one ascending
	// sweep clears every pivot column of v.
	auto it = v.begin();
	while (it != v.end()) {
		auto row = rows_.find(it->first);
		if (row == rows_.end()) {
			++it;
			continue;
		}
		const std::size_t col = it->first;
		Scalar a = it->second;
		axpy(v, -a, row->second);
		it = v.upper_bound(col);
	}
	return v;
}

bool Subspace::insert(SparseVector v)
{
	v = reduce(std::move(v));
	if (v.empty())
		return false;
	const std::size_t pivot = v.begin()->first;
	const Scalar inv = Scalar(1) / v.begin()->second;
	for (auto &[col, c] : v)
		c *= inv;
	rows_.emplace(pivot, std::move(v));
	return true;
}

bool Subspace::contains(const Subspace &other) const
{
	for (const auto &[p, row] : other.rows_)
		if (!contains(row))
			return false;
	return true;
}

std::vector<SparseVector> Subspace::rows() const
{
	std::vector<SparseVector> out;
	out.reserve(rows_.size());
	for (const auto &[p, row] : rows_)
		out.push_back(row);
	return out;
}

std::vector<SparseVector> Subspace::reduced_rows() const
{
	// Back-substitute from the last pivot up; reduced rows vanish on every
	// other pivot column, so their entries can be cleared independently.
	std::map<std::size_t, SparseVector> done;
	for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) {
		SparseVector row = r->second;
		std::vector<std::size_t> hits;
		for (const auto &[col, c] : row)
			if (col != r->first && done.count(col))
				hits.push_back(col);
		for (std::size_t col : hits) {
			Scalar a = row.at(col);
			axpy(row, -a, done.at(col));
		}
		done.emplace(r->first, std::move(row));
	}
	std::vector<SparseVector> out;
	out.reserve(done.size());
	for (auto &[p, row] : done)
		out.push_back(std::move(row));
	return out;
}

std::vector<std::size_t> Subspace::pivots() const
{
	std::vector<std::size_t> out;
	for (const auto &[p, row] : rows_)
		out.push_back(p);
	return out;
}

DenseMatrix Subspace::dense() const
{
	DenseMatrix out;
	for (const auto &row : reduced_rows()) {
		std::vector<Scalar> r(ambient_);
		for (const auto &[col, c] : row)
			if (col < ambient_)
				r[col] = c;
		out.push_back(std::move(r));
	}
	return out;
}

std::size_t rank_fraction_free(DenseMatrix m)
{
	const std::size_t rows = m.size();
	const std::size_t cols = rows ? m[0].size() : 0;
	std::size_t rank = 0;
	Scalar prev = 1;
	for (std::size_t col = 0; col < cols && rank < rows; ++col) {
		std::size_t p = rank;
		while (p < rows && m[p][col].is_zero())
			++p;
		if (p == rows)
			continue;
		std::swap(m[p], m[rank]);
		const Scalar &pivot = m[rank][col];
		for (std::size_t r = rank + 1; r < rows; ++r) {
			for (std::size_t c = col + 1; c < cols; ++c)
				m[r][c] = (pivot * m[r][c] - m[r][col] * m[rank][c]) / prev;
			m[r][col] = 0;
		}
		prev = pivot;
		++rank;
	}
	return rank;
}

} // namespace ym
