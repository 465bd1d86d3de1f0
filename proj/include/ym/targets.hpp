#pragma once

#include "ym/linalg.hpp"
#include "ym/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ym {

// Finite-dimensional Lie algebra given by a labeled basis and structure
// constants [b_i, b_j] = sum_k c_ij^k b_k. Antisymmetry and the Jacobi
// identity are checked on construction.
class StructureConstantAlgebra {
public:
	struct Bracket {
		std::size_t i;
		std::size_t j;
		SparseVector coords;
	};

	// Listed pairs are completed antisymmetrically; unlisted pairs are zero.
	// Throws std::invalid_argument on inconsistent input or a Jacobi failure.
	StructureConstantAlgebra(std::vector<std::string> labels, const std::vector<Bracket> &brackets);

	std::size_t dim() const { return labels_.size(); }
	const std::vector<std::string> &labels() const { return labels_; }
	std::optional<std::size_t> index_of(const std::string &label) const;

	const SparseVector &structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

	// Bracket of coordinate vectors.
	SparseVector bracket(const SparseVector &u, const SparseVector &v) const;

	// Adds another accepted spelling for a basis element.
	void add_alias(std::string alias, std::size_t index);

private:
	std::vector<std::string> labels_;
	std::map<std::string, std::size_t> names_;
	std::vector<SparseVector> table_;
};

using AlgebraPtr = std::shared_ptr<const StructureConstantAlgebra>;

class TargetElement {
public:
	TargetElement() = default;
	TargetElement(AlgebraPtr algebra, SparseVector coords);

	static TargetElement basis(const AlgebraPtr &algebra, const std::string &label, Scalar c = 1);

	const AlgebraPtr &algebra() const { return algebra_; }
	const SparseVector &coords() const { return coords_; }
	bool is_zero() const { return coords_.empty(); }
	Scalar coefficient(const std::string &label) const;

	TargetElement &operator+=(const TargetElement &o);
	TargetElement &operator*=(const Scalar &c);
	friend TargetElement operator+(TargetElement a, const TargetElement &b) { return a += b; }
	friend TargetElement operator-(TargetElement a, const TargetElement &b) { return a += Scalar(-1) * b; }
	friend TargetElement operator*(const Scalar &c, TargetElement a) { return a *= c; }

	friend bool operator==(const TargetElement &a, const TargetElement &b)
	{
		return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
	}

	// e.g. "2*e - h"
	std::string to_string() const;

private:
	AlgebraPtr algebra_;
	SparseVector coords_;
};

// sl(m): basis E^{ij} (i != j) labeled "Eij" and H_i = E^{ii} - E^{i+1,i+1}
// labeled "Hi". For m = 2 the basis is (e, h, f) = (E12, H1, E21), with the
// E-labels accepted as aliases.
AlgebraPtr sl_algebra(int m);

// Basis (p, q, z), [p, q] = z, z central.
AlgebraPtr heisenberg();

TargetElement bracket_in(const StructureConstantAlgebra &algebra, const TargetElement &u, const TargetElement &v);

// Smallest bracket-closed subspace containing gens.
Subspace subalgebra_closure(const StructureConstantAlgebra &algebra, const std::vector<TargetElement> &gens);

bool is_bracket_closed(const StructureConstantAlgebra &algebra, const Subspace &s);

struct SeriesReport {
	std::vector<Subspace> derived_series;
	std::vector<Subspace> lower_central_series;
	bool is_solvable = false;
	bool is_nilpotent = false;

	std::vector<std::size_t> derived_dims() const;
	std::vector<std::size_t> lower_central_dims() const;
};

// Throws std::invalid_argument if s is not bracket-closed.
SeriesReport series_analysis(const StructureConstantAlgebra &algebra, const Subspace &s);

} // namespace ym
