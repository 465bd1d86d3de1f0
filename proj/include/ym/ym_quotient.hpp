#pragma once

// Yang-Mills relators r_j = sum_i [x_i,[x_i,x_j]], the graded ideal they
// generate in f(n), and degreewise dimensions of the quotient ym(n).

#include "ym/free_lie.hpp"
#include "ym/linalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ym {

class DegreeCapExceeded : public std::runtime_error {
public:
	DegreeCapExceeded(int degree, int cap);
	int degree() const { return degree_; }
	int cap() const { return cap_; }

private:
	int degree_;
	int cap_;
};

struct YangMillsPresentation {
	int n = 0;
	// Strong form: the n^2 elements [x_i,[x_i,x_j]] in (i, j) order; the
	// i == j entries are the zero element.
	bool strong = false;
	std::vector<FreeLieElement> relators;
};

YangMillsPresentation ym_relations(int n, bool strong = false);

// Coordinates relative to lyndon_basis(n, d).
class LyndonCoordinates {
public:
	LyndonCoordinates(int n, int d);

	int generators() const { return n_; }
	int degree() const { return d_; }
	std::size_t size() const { return words_.size(); }
	const std::vector<LyndonWord> &words() const { return words_; }

	// Throws std::invalid_argument if a is not homogeneous of this degree.
	SparseVector coords(const FreeLieElement &a) const;
	FreeLieElement element(const SparseVector &v) const;

private:
	int n_;
	int d_;
	std::vector<LyndonWord> words_;
	std::map<LyndonWord, std::size_t> index_;
};

struct GradedSubspace {
	int n = 0;
	int degree = 0;
	Subspace rows;

	std::size_t dim() const { return rows.dim(); }
};

// Components I_1..I_max of the ideal generated by the relators:
// I_3 = span(relators), I_{d+1} = [V(n), I_d]. Index k holds degree k; index 0
// is unused. Throws DegreeCapExceeded when max_degree > cap.
std::vector<GradedSubspace> ideal_components(const YangMillsPresentation &pres, int max_degree,
                                             int cap = kDefaultDegreeCap);

GradedSubspace ideal_graded_component(const YangMillsPresentation &pres, int d, int cap = kDefaultDegreeCap);

std::uint64_t ym_dim(int n, int d, bool strong = false, int cap = kDefaultDegreeCap);

struct DimensionRow {
	int degree;
	std::uint64_t free_dim;
	std::uint64_t ideal_dim;
	std::uint64_t ym_dim;
};

std::vector<DimensionRow> dimension_table(int n, int max_degree, bool strong = false, int cap = kDefaultDegreeCap);

struct MembershipReport {
	std::map<int, bool> per_degree;

	bool all() const
	{
		for (const auto &[d, zero] : per_degree)
			if (!zero)
				return false;
		return true;
	}
};

MembershipReport is_zero_in_ym(const YangMillsPresentation &pres, const FreeLieElement &a,
                               int cap = kDefaultDegreeCap);

} // namespace ym
