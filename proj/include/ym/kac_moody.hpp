#pragma once

// Finite linear-algebra data attached to a matrix A = (a_ij): generalized
// Cartan matrix checks, realizations (h, Pi, Pi^vee) with dim h = 2m - r, and
// the generator count from which g(A) is claimed to be a Yang-Mills quotient.

#include "ym/linalg.hpp"

#include <optional>
#include <string>

namespace ym {

class MatrixData {
public:
	// Throws std::invalid_argument unless entries form a nonempty square matrix.
	explicit MatrixData(DenseMatrix entries);

	std::size_t size() const { return entries_.size(); }
	std::size_t rank() const { return rank_; }
	const DenseMatrix &entries() const { return entries_; }
	const Scalar &operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

private:
	DenseMatrix entries_;
	std::size_t rank_;
};

struct CartanCheck {
	bool ok = true;
	// First violated condition, empty when ok.
	std::string reason;
};

CartanCheck is_generalized_cartan(const MatrixData &a);

struct RealizationOfMatrix {
	std::size_t h_dim = 0;
	DenseMatrix pi;       // row i: coordinates of alpha_i on h*
	DenseMatrix pi_check; // row i: coordinates of alpha_i^vee on h
};

// Coroots are the first m coordinate vectors of h; alpha_j carries column j
// of A in its first m coordinates, and unit vectors in the last m - r
// coordinates complete the roots for indices outside the lexicographically
// first maximal independent column set of A.
RealizationOfMatrix build_realization(const MatrixData &a);

// <alpha_i^vee, alpha_j> = sum_k pi_check[i][k] * pi[j][k].
DenseMatrix pairing(const RealizationOfMatrix &r);

bool verify_realization(const RealizationOfMatrix &r, const MatrixData &a);

// 4 when r + 2 >= m, otherwise max(4, 2(m - r)).
std::size_t ym_quotient_bound(const MatrixData &a);

} // namespace ym
