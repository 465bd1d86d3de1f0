#pragma once

#include "ym/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace ym {

using SparseVector = std::map<std::size_t, Scalar>;
using DenseMatrix = std::vector<std::vector<Scalar>>;

void axpy(SparseVector &y, const Scalar &a, const SparseVector &x);
SparseVector scaled(const SparseVector &x, const Scalar &a);

// Subspace of an ambient coordinate space, held as a row-echelon basis with
// pivot coefficient 1 at each row's first nonzero column. Rows are not
// back-reduced on insert: full reduction fills rows in and dominates the
// cost of large ideal closures. reduced_rows() gives the canonical basis.
class Subspace {
public:
	explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return rows_.size(); }

	// Returns true when the dimension grew.
	bool insert(SparseVector v);
	SparseVector reduce(SparseVector v) const;
	bool contains(const SparseVector &v) const { return reduce(v).empty(); }
	bool contains(const Subspace &other) const;

	std::vector<SparseVector> rows() const;
	std::vector<std::size_t> pivots() const;
	std::vector<SparseVector> reduced_rows() const;
	DenseMatrix dense() const; // reduced form

	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.dim() == b.dim() && a.contains(b);
	}

private:
	std::size_t ambient_;
	std::map<std::size_t, SparseVector> rows_; // pivot column -> row
};

// Rank by fraction-free (Bareiss) elimination.
std::size_t rank_fraction_free(DenseMatrix m);

} // namespace ym
